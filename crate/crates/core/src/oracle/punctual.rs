//! Ideals of finite colength in the local rings of the double line `x^2 = 0`
//! and the node `xy = 0`, counted over `F_2` and `F_3`.
//!
//! The ambient algebra is `F_q[x,y] / (x^2 or xy, m^(c+1))`, of dimension
//! `2c + 1`, with monomial basis
//!
//! * ribbon: `1, y, ..., y^c, x, xy, ..., xy^(c-1)`;
//! * node: `1, x, ..., x^c, y, ..., y^c`.
//!
//! Every ideal of colength `c` contains `m^c`, so it is determined by its image
//! here. Both rings have embedding dimension two and multiplicity two, so each
//! such ideal has at most two generators; the enumeration walks every ordered
//! pair `(f, g)`, takes the span of all monomial multiples, and keeps the
//! reduced echelon forms of colength `c`.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::dsl::eval_source;
use crate::error::{Error, Result};

pub const MAX_COLENGTH: u32 = 6;
/// Default limit on the size `q^(2 dim)` of the generator-pair space.
pub const DEFAULT_BUDGET: u128 = 400_000_000;
/// Smallest budget override accepted.
pub const MIN_BUDGET: u128 = 10_000;

const MAX_DIM: usize = 2 * MAX_COLENGTH as usize + 1;
/// Ideals of colength `c` have dimension `c + 1` here.
const MAX_RANK: usize = MAX_COLENGTH as usize + 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curve {
    /// `x^2 = 0`.
    Ribbon,
    /// `xy = 0`.
    Node,
}

impl Curve {
    pub const ALL: [Curve; 2] = [Curve::Ribbon, Curve::Node];

    pub fn id(self) -> &'static str {
        match self {
            Curve::Ribbon => "ribbon",
            Curve::Node => "node",
        }
    }
}

impl std::fmt::Display for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ribbon" => Ok(Curve::Ribbon),
            "node" => Ok(Curve::Node),
            _ => Err(Error::Unsupported(format!(
                "curve {s:?}: expected ribbon or node"
            ))),
        }
    }
}

/// The truncated local ring and its multiplication by monomials.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub curve: Curve,
    /// Truncation order: `m^(c+1) = 0`.
    pub c: u32,
    /// Basis monomials as exponent pairs `(a, b)` for `x^a y^b`.
    pub monomials: Vec<(u32, u32)>,
    /// `shift[m][i]`: index of `monomials[m] * monomials[i]`, if nonzero.
    shift: Vec<Vec<Option<usize>>>,
}

impl Algebra {
    pub fn new(curve: Curve, c: u32) -> Self {
        let monomials: Vec<(u32, u32)> = match curve {
            Curve::Ribbon => (0..=c)
                .map(|j| (0, j))
                .chain((0..c).map(|j| (1, j)))
                .collect(),
            Curve::Node => std::iter::once((0, 0))
                .chain((1..=c).map(|i| (i, 0)))
                .chain((1..=c).map(|j| (0, j)))
                .collect(),
        };
        let index = |a: u32, b: u32| monomials.iter().position(|&m| m == (a, b));
        let shift = monomials
            .iter()
            .map(|&(a, b)| {
                monomials
                    .iter()
                    .map(|&(a2, b2)| index(a + a2, b + b2))
                    .collect()
            })
            .collect();
        Self {
            curve,
            c,
            monomials,
            shift,
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    fn index_of(&self, m: (u32, u32)) -> usize {
        self.monomials
            .iter()
            .position(|&x| x == m)
            .expect("basis monomial")
    }

    /// `m * v` for a basis monomial `m` and a coefficient vector `v`.
    pub fn multiply(&self, m: usize, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; v.len()];
        for (i, &c) in v.iter().enumerate() {
            if let Some(j) = self.shift[m][i] {
                out[j] = c;
            }
        }
        out
    }

    pub fn x(&self) -> usize {
        self.index_of((1, 0))
    }

    pub fn y(&self) -> usize {
        self.index_of((0, 1))
    }
}

/// An ideal as the reduced echelon basis of its image in the ambient algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealRecord {
    pub curve: Curve,
    pub q: u32,
    /// Truncation order of the ambient algebra.
    pub truncation: u32,
    /// Rows in reduced echelon form with pivots at their lowest index, sorted
    /// by pivot. Row entries are indexed by the ambient monomial basis.
    pub basis: Vec<Vec<u8>>,
    /// Ambient dimension minus the number of rows.
    pub colength: u32,
}

fn in_span(f: &Field, basis: &[Vec<u8>], v: &[u8]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    f.rref(&all).len() == f.rref(basis).len()
}

impl IdealRecord {
    /// Validates echelon form and closure under `x` and `y`.
    pub fn new(curve: Curve, q: u32, truncation: u32, basis: Vec<Vec<u8>>) -> Result<Self> {
        let f = prime_field(q)?;
        let alg = Algebra::new(curve, truncation);
        let dim = alg.dim();
        if basis
            .iter()
            .any(|r| r.len() != dim || r.iter().any(|&c| u32::from(c) >= q))
        {
            return Err(Error::Registry(format!(
                "ideal rows must have {dim} entries below {q}"
            )));
        }
        if f.rref(&basis) != basis {
            return Err(Error::Registry(
                "ideal basis is not in reduced echelon form".into(),
            ));
        }
        for row in &basis {
            for m in [alg.x(), alg.y()] {
                if !in_span(&f, &basis, &alg.multiply(m, row)) {
                    return Err(Error::Registry(format!(
                        "subspace is not closed under multiplication by {}",
                        if m == alg.x() { "x" } else { "y" }
                    )));
                }
            }
        }
        Ok(Self {
            curve,
            q,
            truncation,
            colength: (dim - basis.len()) as u32,
            basis,
        })
    }

    /// The ideal generated by `gens` in the ambient algebra of the given
    /// truncation order.
    pub fn generated(curve: Curve, q: u32, truncation: u32, gens: &[Vec<u8>]) -> Result<Self> {
        let f = prime_field(q)?;
        let alg = Algebra::new(curve, truncation);
        let multiples: Vec<Vec<u8>> = gens
            .iter()
            .flat_map(|g| {
                (0..alg.dim())
                    .map(|m| alg.multiply(m, g))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::new(curve, q, truncation, f.rref(&multiples))
    }

    /// The ideal generated by the rows, recomputed from scratch.
    pub fn reclose(&self) -> Result<Self> {
        Self::generated(self.curve, self.q, self.truncation, &self.basis)
    }
}

fn prime_field(q: u32) -> Result<Field> {
    let f = Field::new(q)?;
    if f.degree() != 1 {
        return Err(Error::Unsupported(format!(
            "ideal enumeration works over prime fields, got GF({q})"
        )));
    }
    Ok(f)
}

/// Iteration order of the generator-pair index: `t -> (stride * t + offset) mod N`.
///
/// `stride` must be odd and prime to 3 so the map permutes every `q`-power range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairOrder {
    pub stride: u64,
    pub offset: u64,
}

impl Default for PairOrder {
    fn default() -> Self {
        Self {
            stride: 1,
            offset: 0,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub budget: u128,
    pub order: PairOrder,
    /// Report progress on standard error.
    pub progress: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            order: PairOrder::default(),
            progress: false,
        }
    }
}

/// Size of the full generator-pair space `q^(2 dim)` charged against the budget.
pub fn pair_space(c: u32, q: u32) -> u128 {
    u128::from(q).pow(2 * (2 * c + 1))
}

fn check_args(c: u32, q: u32, budget: u128) -> Result<Field> {
    if c == 0 || c > MAX_COLENGTH {
        return Err(Error::OutOfRange {
            what: "colength",
            value: c.into(),
            allowed: "1..=6",
        });
    }
    if !matches!(q, 2 | 3) {
        return Err(Error::Unsupported(format!(
            "ideal counts need q in {{2, 3}}, got {q}"
        )));
    }
    let needed = pair_space(c, q);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed,
            limit: budget,
        });
    }
    prime_field(q)
}

type Key = [u64; MAX_RANK];

/// Walks the index range in chunks, one local set per chunk, merged by union.
fn sweep<F>(total: u64, order: PairOrder, progress: Option<&str>, visit: F) -> HashSet<Key>
where
    F: Fn(u64, &mut HashSet<Key>) + Sync,
{
    assert!(
        order.stride % 2 == 1 && !order.stride.is_multiple_of(3),
        "stride must be prime to 2 and 3"
    );
    const CHUNK: u64 = 1 << 16;
    let chunks = total.div_ceil(CHUNK);
    let done = AtomicU64::new(0);
    let step = (chunks / 20).max(1);
    (0..chunks)
        .into_par_iter()
        .fold(HashSet::new, |mut set, chunk| {
            let end = ((chunk + 1) * CHUNK).min(total);
            for t in chunk * CHUNK..end {
                let idx = ((u128::from(order.stride) * u128::from(t) + u128::from(order.offset))
                    % u128::from(total)) as u64;
                visit(idx, &mut set);
            }
            if let Some(label) = progress {
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n.is_multiple_of(step) || n == chunks {
                    eprintln!("{label}: {}%", n * 100 / chunks);
                }
            }
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// `F_2` path: vectors are bit masks, multiplication by a monomial is a table
/// lookup over all `2^dim` vectors.
fn enumerate_bits(alg: &Algebra, c: u32, opts: &EnumOptions) -> HashSet<Key> {
    let dim = alg.dim();
    let rank = dim - c as usize;
    let tables: Vec<Vec<u16>> = (0..dim)
        .map(|m| {
            (0u32..1 << dim)
                .map(|v| {
                    (0..dim)
                        .filter(|&i| v >> i & 1 == 1)
                        .filter_map(|i| alg.shift[m][i])
                        .fold(0u16, |acc, j| acc | 1 << j)
                })
                .collect()
        })
        .collect();
    // generators lie in the maximal ideal: bit 0 clear
    let side = 1u64 << (dim - 1);
    let label = format!("punctual {} c={c} q=2", alg.curve);
    sweep(
        side * side,
        opts.order,
        opts.progress.then_some(label.as_str()),
        |idx, set| {
            let (fi, gi) = (idx / side, idx % side);
            if fi > gi {
                return;
            }
            let gens = [(fi << 1) as u16, (gi << 1) as u16];
            let mut pivots = [0u16; MAX_DIM];
            let mut r = 0;
            for g in gens {
                for table in &tables {
                    let mut v = table[g as usize];
                    while v != 0 {
                        let b = v.trailing_zeros() as usize;
                        if pivots[b] == 0 {
                            pivots[b] = v;
                            r += 1;
                            break;
                        }
                        v ^= pivots[b];
                    }
                    if r > rank {
                        return;
                    }
                }
            }
            if r != rank {
                return;
            }
            // back-substitute from the highest pivot down
            for b in (0..dim).rev() {
                if pivots[b] == 0 {
                    continue;
                }
                for lower in 0..b {
                    if pivots[lower] >> b & 1 == 1 {
                        pivots[lower] ^= pivots[b];
                    }
                }
            }
            let mut key = [0u64; MAX_RANK];
            for (slot, &row) in key.iter_mut().zip(pivots.iter().filter(|&&p| p != 0)) {
                *slot = u64::from(row);
            }
            set.insert(key);
        },
    )
}

/// Prime-field path with byte vectors.
fn enumerate_generic(alg: &Algebra, c: u32, f: &Field, opts: &EnumOptions) -> HashSet<Key> {
    let dim = alg.dim();
    let rank = dim - c as usize;
    let q = u64::from(f.order());
    let side = q.pow(dim as u32 - 1);
    let shift = &alg.shift;
    let label = format!("punctual {} c={c} q={q}", alg.curve);
    let decode = |mut code: u64| {
        let mut v = [0u8; MAX_DIM];
        for slot in v.iter_mut().take(dim).skip(1) {
            *slot = (code % q) as u8;
            code /= q;
        }
        v
    };
    sweep(
        side * side,
        opts.order,
        opts.progress.then_some(label.as_str()),
        |idx, set| {
            let (fi, gi) = (idx / side, idx % side);
            if fi > gi {
                return;
            }
            let mut rows: [Option<[u8; MAX_DIM]>; MAX_DIM] = [None; MAX_DIM];
            let mut r = 0;
            for g in [decode(fi), decode(gi)] {
                for sm in shift.iter() {
                    let mut v = [0u8; MAX_DIM];
                    for i in 0..dim {
                        if g[i] != 0 {
                            if let Some(j) = sm[i] {
                                v[j] = g[i];
                            }
                        }
                    }
                    for b in 0..dim {
                        if v[b] == 0 {
                            continue;
                        }
                        match rows[b] {
                            Some(row) => {
                                let s = v[b];
                                for i in b..dim {
                                    v[i] = f.sub(v[i], f.mul(s, row[i]));
                                }
                            }
                            None => {
                                let s = f.inv(v[b]).expect("nonzero");
                                for x in v.iter_mut().take(dim).skip(b) {
                                    *x = f.mul(*x, s);
                                }
                                rows[b] = Some(v);
                                r += 1;
                                break;
                            }
                        }
                    }
                    if r > rank {
                        return;
                    }
                }
            }
            if r != rank {
                return;
            }
            for b in (0..dim).rev() {
                let Some(row) = rows[b] else { continue };
                for low in rows[..b].iter_mut().flatten() {
                    let s = low[b];
                    if s != 0 {
                        for i in b..dim {
                            low[i] = f.sub(low[i], f.mul(s, row[i]));
                        }
                    }
                }
            }
            let mut key = [0u64; MAX_RANK];
            for (slot, row) in key.iter_mut().zip(rows.iter().flatten()) {
                *slot = row[..dim]
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &x| acc * q + u64::from(x));
            }
            set.insert(key);
        },
    )
}

fn key_to_record(alg: &Algebra, q: u32, key: &Key) -> Result<IdealRecord> {
    let dim = alg.dim();
    let basis = key
        .iter()
        .take(dim - alg.c as usize)
        .map(|&code| {
            let mut code = code;
            (0..dim)
                .map(|_| {
                    let d = (code % u64::from(q)) as u8;
                    code /= u64::from(q);
                    d
                })
                .collect()
        })
        .collect();
    IdealRecord::new(alg.curve, q, alg.c, basis)
}

/// All ideals of colength `c`, sorted.
pub fn enumerate_ideals(
    curve: Curve,
    c: u32,
    q: u32,
    opts: &EnumOptions,
) -> Result<Vec<IdealRecord>> {
    let f = check_args(c, q, opts.budget)?;
    let alg = Algebra::new(curve, c);
    let keys = if q == 2 {
        enumerate_bits(&alg, c, opts)
    } else {
        enumerate_generic(&alg, c, &f, opts)
    };
    let records: BTreeSet<IdealRecord> = keys
        .iter()
        .map(|k| key_to_record(&alg, q, k))
        .collect::<Result<_>>()?;
    Ok(records.into_iter().collect())
}

/// As [`enumerate_ideals`], always through the byte-vector path.
pub fn enumerate_ideals_generic(
    curve: Curve,
    c: u32,
    q: u32,
    opts: &EnumOptions,
) -> Result<Vec<IdealRecord>> {
    let f = check_args(c, q, opts.budget)?;
    let alg = Algebra::new(curve, c);
    let records: BTreeSet<IdealRecord> = enumerate_generic(&alg, c, &f, opts)
        .iter()
        .map(|k| key_to_record(&alg, q, k))
        .collect::<Result<_>>()?;
    Ok(records.into_iter().collect())
}

pub fn count_punctual_ideals(curve: Curve, c: u32, q: u32) -> Result<u64> {
    count_punctual_ideals_with(curve, c, q, &EnumOptions::default())
}

pub fn count_punctual_ideals_with(curve: Curve, c: u32, q: u32, opts: &EnumOptions) -> Result<u64> {
    Ok(enumerate_ideals(curve, c, q, opts)?.len() as u64)
}

/// Every subspace of `F_2^dim` of dimension `dim - c` closed under `x` and `y`,
/// found without generators. Limited to `c <= 4`.
pub fn ideals_by_subspace_walk(curve: Curve, c: u32) -> Result<Vec<IdealRecord>> {
    if c == 0 || c > 4 {
        return Err(Error::OutOfRange {
            what: "colength",
            value: c.into(),
            allowed: "1..=4",
        });
    }
    let alg = Algebra::new(curve, c);
    let dim = alg.dim();
    let rank = dim - c as usize;
    let closed = |rows: &[u16]| {
        let span_has = |mut v: u16| {
            for &r in rows {
                if v >> r.trailing_zeros() & 1 == 1 {
                    v ^= r;
                }
            }
            v == 0
        };
        rows.iter().all(|&r| {
            [alg.x(), alg.y()].into_iter().all(|m| {
                let img = (0..dim)
                    .filter(|&i| r >> i & 1 == 1)
                    .filter_map(|i| alg.shift[m][i])
                    .fold(0u16, |acc, j| acc | 1 << j);
                span_has(img)
            })
        })
    };
    let mut out = BTreeSet::new();
    for pivots in (0u32..1 << dim).filter(|p| p.count_ones() as usize == rank) {
        let piv: Vec<usize> = (0..dim).filter(|&i| pivots >> i & 1 == 1).collect();
        // free slots above each pivot, away from the other pivots
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(k, &p)| {
                (p + 1..dim)
                    .filter(|&j| pivots >> j & 1 == 0)
                    .map(move |j| (k, j))
            })
            .collect();
        for fill in 0u64..1 << free.len() {
            let mut rows: Vec<u16> = piv.iter().map(|&p| 1 << p).collect();
            for (bit, &(k, j)) in free.iter().enumerate() {
                if fill >> bit & 1 == 1 {
                    rows[k] |= 1 << j;
                }
            }
            if closed(&rows) {
                let basis = rows
                    .iter()
                    .map(|&r| (0..dim).map(|i| (r >> i & 1) as u8).collect())
                    .collect();
                out.insert(IdealRecord::new(curve, 2, c, basis)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// One row of an ideal table: a family of ideals and its parameter space,
/// written in the expression language.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub curve: Curve,
    pub colength: u32,
    pub ideal: String,
    pub params: String,
    /// Rows kept for the record but left out of the sums.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub excluded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctualTable {
    pub rows: Vec<TableRow>,
}

impl PunctualTable {
    pub fn builtin() -> &'static Self {
        static TABLE: OnceLock<PunctualTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            Self::from_json(include_str!("../../data/punctual_tables.json"))
                .expect("builtin ideal table is valid")
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let table: Self = serde_json::from_str(text).map_err(|e| Error::Registry(e.to_string()))?;
        for row in &table.rows {
            eval_source(&row.params)?;
        }
        Ok(table)
    }

    pub fn rows(&self, curve: Curve, c: u32) -> impl Iterator<Item = &TableRow> {
        self.rows
            .iter()
            .filter(move |r| r.curve == curve && r.colength == c)
    }

    /// Sum over the included rows of each parameter space's point count at
    /// `L = q`.
    pub fn expected(&self, curve: Curve, c: u32, q: u32) -> Result<u64> {
        self.sum(self.rows(curve, c).filter(|r| !r.excluded), q)
    }

    /// As [`expected`](Self::expected), excluded rows included.
    pub fn literal_expected(&self, curve: Curve, c: u32, q: u32) -> Result<u64> {
        self.sum(self.rows(curve, c), q)
    }

    fn sum<'a>(&self, rows: impl Iterator<Item = &'a TableRow>, q: u32) -> Result<u64> {
        let mut total = 0u64;
        for row in rows {
            let n = eval_source(&row.params)?.evaluate(q);
            total += n.to_u64().ok_or_else(|| {
                Error::Registry(format!(
                    "row {:?} has negative count {n} at q = {q}",
                    row.ideal
                ))
            })?;
        }
        Ok(total)
    }
}
