//! Small finite fields by lookup table.
//!
//! An element of `GF(p^k)` is the integer whose base-`p` digits are its
//! coordinates in the power basis `1, a, a^2, ...` of a root `a` of a monic
//! irreducible polynomial of degree `k`.

use crate::error::{Error, Result};

/// Largest order accepted; elements must fit in a `u8` with room for tables.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    degree: u32,
    order: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut x = x;
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues modulo the monic `modulus` (lower coefficients
/// only, the leading 1 is implicit).
fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^k = -modulus(x)
    for top in (k..2 * k).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (j, &m) in modulus.iter().enumerate() {
            prod[top - k + j] = (prod[top - k + j] + (p - m) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl Field {
    /// `GF(q)` for a prime power `q <= MAX_ORDER`.
    pub fn new(q: u32) -> Result<Self> {
        let Some((p, k)) = prime_power(q).filter(|_| q <= MAX_ORDER) else {
            return Err(Error::Unsupported(format!(
                "GF({q}): need a prime power at most {MAX_ORDER}"
            )));
        };
        let n = q as usize;
        // the first monic polynomial of degree k whose quotient has no zero divisors
        let table = (0..p.pow(k))
            .map(|m| digits(m, p, k))
            .find_map(|modulus| {
                let mut mul = vec![0u8; n * n];
                for a in 1..q {
                    for b in 1..q {
                        let c =
                            undigits(&mul_mod(&digits(a, p, k), &digits(b, p, k), &modulus, p), p);
                        if c == 0 {
                            return None;
                        }
                        mul[(a * q + b) as usize] = c as u8;
                    }
                }
                Some(mul)
            })
            .expect("an irreducible polynomial exists in every degree");
        let mut add = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let s: Vec<u32> = da
                    .iter()
                    .zip(digits(b, p, k))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[(a * q + b) as usize] = undigits(&s, p) as u8;
            }
            let m: Vec<u32> = da.iter().map(|x| (p - x) % p).collect();
            neg[a as usize] = undigits(&m, p) as u8;
        }
        let mut inv = vec![0u8; n];
        for a in 1..n {
            inv[a] = (1..n).find(|&b| table[a * n + b] == 1).expect("field") as u8;
        }
        Ok(Self {
            p,
            degree: k,
            order: q,
            add,
            mul: table,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order as u8
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `x -> x^s` for `s` a power of the characteristic.
    pub fn frobenius(&self, a: u8, s: u32) -> u8 {
        self.pow(a, s)
    }

    /// Reduced row echelon form of `rows`, pivots leftmost, zero rows dropped.
    pub fn rref(&self, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let width = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let s = self.inv(m[rank][col]).expect("nonzero pivot");
            for x in m[rank].iter_mut() {
                *x = self.mul(*x, s);
            }
            for r in 0..m.len() {
                let f = m[r][col];
                if r != rank && f != 0 {
                    let pivot_row = m[rank].clone();
                    for (x, &p) in m[r].iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, p));
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }
}
