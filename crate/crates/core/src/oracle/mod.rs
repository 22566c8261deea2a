//! Brute-force point and ideal counts over small finite fields, compared with
//! the polynomial classes evaluated at `L = q`.

pub mod field;
pub mod points;
pub mod punctual;

use std::fmt;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::atoms::{grassmannian, hilb_p2, projective};
use crate::error::{Error, Result};
use crate::ring::MotiveClass;

pub use points::{count_grassmannian, count_hilb2_p2, count_projective_points, count_sym2_p2};
pub use punctual::{
    count_punctual_ideals, count_punctual_ideals_with, enumerate_ideals, Curve, EnumOptions,
    IdealRecord, PunctualTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One oracle count next to the polynomial it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqCountResult {
    pub counter: String,
    pub q: u32,
    pub params: String,
    /// `None` when the count was skipped.
    pub count: Option<u64>,
    /// The class evaluated at `L = q`.
    pub expected: u64,
    pub millis: u64,
    /// Why a row was skipped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FqCountResult {
    pub fn status(&self) -> Status {
        match self.count {
            None => Status::Skipped,
            Some(c) if c == self.expected => Status::Pass,
            Some(_) => Status::Fail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

/// CSV with header `counter,q,params,count,expected,pass,millis`.
pub fn to_csv(results: &[FqCountResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "counter", "q", "params", "count", "expected", "pass", "millis",
    ])
    .expect("in-memory write");
    for r in results {
        w.write_record([
            r.counter.clone(),
            r.q.to_string(),
            r.params.clone(),
            r.count.map(|c| c.to_string()).unwrap_or_default(),
            r.expected.to_string(),
            r.status().to_string(),
            r.millis.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

fn evaluate_at(class: &MotiveClass, q: u32) -> Result<u64> {
    let v = class.evaluate(q);
    v.to_u64()
        .ok_or_else(|| Error::Unsupported(format!("{class} at L = {q} is {v}, not a count")))
}

fn timed(
    counter: &str,
    q: u32,
    params: String,
    expected: u64,
    count: impl FnOnce() -> Result<u64>,
) -> Result<FqCountResult> {
    let start = Instant::now();
    let count = count()?;
    Ok(FqCountResult {
        counter: counter.into(),
        q,
        params,
        count: Some(count),
        expected,
        millis: start.elapsed().as_millis() as u64,
        note: None,
    })
}

pub fn grassmannian_check(k: u32, n: u32, q: u32) -> Result<FqCountResult> {
    let expected = evaluate_at(&grassmannian(k, n), q)?;
    timed("gr", q, format!("({k},{n})"), expected, || {
        count_grassmannian(k as usize, n as usize, q)
    })
}

/// `Hilb^n(P^2)` for `n` in `{1, 2}`.
pub fn hilb_check(n: u32, q: u32) -> Result<FqCountResult> {
    let expected = evaluate_at(&hilb_p2(n)?, q)?;
    let counter = format!("hilb{n}");
    match n {
        1 => timed(&counter, q, "(1)".into(), expected, || {
            count_projective_points(2, q)
        }),
        2 => timed(&counter, q, "(2)".into(), expected, || count_hilb2_p2(q)),
        _ => Err(Error::Unsupported(format!("no point counter for Hilb{n}"))),
    }
}

pub fn sym2_check(q: u32) -> Result<FqCountResult> {
    let expected = evaluate_at(&projective(2).sym_power(2)?, q)?;
    timed("sym2", q, "(P2)".into(), expected, || count_sym2_p2(q))
}

/// Enumerated ideal count of one colength against the table row sum.
pub fn count_punctual_total_vs_table(
    curve: Curve,
    c: u32,
    q: u32,
    opts: &EnumOptions,
) -> Result<FqCountResult> {
    let table = PunctualTable::builtin();
    let expected = table.expected(curve, c, q)?;
    let literal = table.literal_expected(curve, c, q)?;
    let mut row = timed("punctual", q, format!("({curve},{c})"), expected, || {
        count_punctual_ideals_with(curve, c, q, opts)
    })?;
    if literal != expected {
        row.note = Some(format!("{literal} with the excluded table rows"));
    }
    Ok(row)
}

/// A polynomial atom with a registered point counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bridge {
    Grassmannian { k: u32, n: u32 },
    Hilb(u32),
    Sym2P2,
    Punctual { curve: Curve, c: u32 },
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bridge::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            Bridge::Hilb(n) => write!(f, "Hilb{n}"),
            Bridge::Sym2P2 => f.write_str("Sym2(P2)"),
            Bridge::Punctual { curve, c } => write!(f, "punctual({curve},{c})"),
        }
    }
}

/// Grassmannians with `k <= 2`, `n <= 6`.
pub fn grassmannian_bridges() -> Vec<Bridge> {
    (1..=6)
        .flat_map(|n| (0..=n.min(2)).map(move |k| Bridge::Grassmannian { k, n }))
        .collect()
}

/// Every registered bridge, with ideal tables up to `max_colength`.
pub fn registered_bridges(max_colength: u32) -> Vec<Bridge> {
    let mut out = grassmannian_bridges();
    out.extend([Bridge::Hilb(1), Bridge::Hilb(2), Bridge::Sym2P2]);
    for curve in Curve::ALL {
        out.extend((1..=max_colength).map(|c| Bridge::Punctual { curve, c }));
    }
    out
}

fn skipped(bridge: Bridge, q: u32, err: &Error) -> FqCountResult {
    let (counter, params) = match bridge {
        Bridge::Grassmannian { k, n } => ("gr".to_string(), format!("({k},{n})")),
        Bridge::Hilb(n) => (format!("hilb{n}"), format!("({n})")),
        Bridge::Sym2P2 => ("sym2".into(), "(P2)".into()),
        Bridge::Punctual { curve, c } => ("punctual".into(), format!("({curve},{c})")),
    };
    let expected = match bridge {
        Bridge::Punctual { curve, c } => PunctualTable::builtin().expected(curve, c, q).ok(),
        _ => None,
    };
    FqCountResult {
        counter,
        q,
        params,
        count: None,
        expected: expected.unwrap_or_default(),
        millis: 0,
        note: Some(err.to_string()),
    }
}

/// Runs one bridge for each `q`. Failures to count become skipped rows, so
/// mismatches and skips are both data.
pub fn bridge_check(bridge: Bridge, qs: &[u32], opts: &EnumOptions) -> Vec<FqCountResult> {
    qs.iter()
        .map(|&q| {
            let run = match bridge {
                Bridge::Grassmannian { k, n } => grassmannian_check(k, n, q),
                Bridge::Hilb(n) => hilb_check(n, q),
                Bridge::Sym2P2 => sym2_check(q),
                Bridge::Punctual { curve, c } => count_punctual_total_vs_table(curve, c, q, opts),
            };
            run.unwrap_or_else(|e| skipped(bridge, q, &e))
        })
        .collect()
}
