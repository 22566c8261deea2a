//! Rational point counts of projective spaces, Grassmannians and length-two
//! subschemes of the plane, by explicit enumeration.

use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::error::{Error, Result};

/// All vectors of `F^len`, in lexicographic order of their element codes.
fn vectors(f: &Field, len: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
    let q = f.order() as u64;
    (0..q.pow(len as u32)).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = (code % q) as u8;
                code /= q;
                d
            })
            .collect()
    })
}

/// Points of `P^n(F)` as normalised coordinate vectors: the first nonzero
/// coordinate is 1.
pub fn projective_points(f: &Field, n: usize) -> Vec<Vec<u8>> {
    vectors(f, n + 1)
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

pub fn count_projective_points(n: usize, q: u32) -> Result<u64> {
    Ok(projective_points(&Field::new(q)?, n).len() as u64)
}

fn supported_gr_field(q: u32) -> Result<Field> {
    let f = Field::new(q)?;
    if f.degree() > 1 && q != 4 {
        return Err(Error::Unsupported(format!(
            "Grassmannian count over GF({q}): only prime fields and GF(4)"
        )));
    }
    Ok(f)
}

/// Number of `k`-dimensional subspaces of `F_q^n`, counted by walking every
/// reduced echelon form. Each candidate is pushed back through elimination to
/// confirm that it is its own canonical form.
pub fn count_grassmannian(k: usize, n: usize, q: u32) -> Result<u64> {
    let f = supported_gr_field(q)?;
    if k > n {
        return Ok(0);
    }
    let mut count = 0u64;
    for pivots in combinations(n, k) {
        // free slots: row i, columns after its pivot that are not pivots
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        for fill in vectors(&f, free.len()) {
            let mut m = vec![vec![0u8; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p] = 1;
            }
            for (&(i, c), &v) in free.iter().zip(&fill) {
                m[i][c] = v;
            }
            debug_assert_eq!(f.rref(&m), m);
            count += 1;
        }
    }
    Ok(count)
}

/// Increasing `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rational points of `P^2` over the base field and its quadratic extension,
/// and the Frobenius orbits of size two among the latter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanePoints {
    pub q: u32,
    /// `|P^2(F_q)|`.
    pub n1: u64,
    /// `|P^2(F_{q^2})|`.
    pub n2: u64,
    /// Points of `P^2(F_{q^2})` fixed by `x -> x^q`.
    pub fixed: u64,
    /// Unordered pairs `{P, Frob(P)}` with `P != Frob(P)`.
    pub conjugate_pairs: u64,
}

fn hilb2_field(q: u32) -> Result<(Field, Field)> {
    if !matches!(q, 2..=4) {
        return Err(Error::Unsupported(format!(
            "length-two counts need q in 2..=4, got {q}"
        )));
    }
    Ok((Field::new(q)?, Field::new(q * q)?))
}

pub fn plane_points(q: u32) -> Result<PlanePoints> {
    let (base, ext) = hilb2_field(q)?;
    let n1 = projective_points(&base, 2).len() as u64;
    let pts = projective_points(&ext, 2);
    let frob = |p: &Vec<u8>| -> Vec<u8> { p.iter().map(|&c| ext.frobenius(c, q)).collect() };
    let mut fixed = 0;
    let mut conjugate_pairs = 0;
    for p in &pts {
        // Frobenius keeps the leading 1, so the image is normalised too
        let img = frob(p);
        match p.cmp(&img) {
            std::cmp::Ordering::Equal => fixed += 1,
            std::cmp::Ordering::Less => conjugate_pairs += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(PlanePoints {
        q,
        n1,
        n2: pts.len() as u64,
        fixed,
        conjugate_pairs,
    })
}

/// Length-two subschemes of `P^2` defined over `F_q`, by type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hilb2Count {
    pub q: u32,
    /// Two distinct rational points.
    pub rational_pairs: u64,
    /// A point over `F_{q^2}` with its conjugate.
    pub conjugate_pairs: u64,
    /// A rational point with a rational tangent direction.
    pub non_reduced: u64,
    pub total: u64,
}

pub fn hilb2_p2(q: u32) -> Result<Hilb2Count> {
    let pts = plane_points(q)?;
    let directions = projective_points(&Field::new(q)?, 1).len() as u64;
    let rational_pairs = pts.n1 * (pts.n1 - 1) / 2;
    let non_reduced = pts.n1 * directions;
    Ok(Hilb2Count {
        q,
        rational_pairs,
        conjugate_pairs: pts.conjugate_pairs,
        non_reduced,
        total: rational_pairs + pts.conjugate_pairs + non_reduced,
    })
}

pub fn count_hilb2_p2(q: u32) -> Result<u64> {
    Ok(hilb2_p2(q)?.total)
}

/// `|Sym^2(P^2)(F_q)|`: unordered rational pairs, diagonal included, plus
/// conjugate pairs.
pub fn count_sym2_p2(q: u32) -> Result<u64> {
    let pts = plane_points(q)?;
    Ok(pts.n1 * (pts.n1 + 1) / 2 + pts.conjugate_pairs)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    /// Every spanning `k`-tuple of vectors, reduced to its canonical form.
    fn subspaces_by_spanning_sets(k: usize, n: usize, q: u32) -> usize {
        let f = Field::new(q).unwrap();
        let all: Vec<Vec<u8>> = vectors(&f, n).collect();
        let mut seen = HashSet::new();
        let mut idx = vec![0usize; k];
        loop {
            let rows: Vec<Vec<u8>> = idx.iter().map(|&i| all[i].clone()).collect();
            let r = f.rref(&rows);
            if r.len() == k {
                seen.insert(r);
            }
            let Some(pos) = (0..k).find(|&i| idx[i] + 1 < all.len()) else {
                break;
            };
            idx[pos] += 1;
            idx[..pos].fill(0);
        }
        if k == 0 {
            return 1;
        }
        seen.len()
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(count_grassmannian(2, 4, 2).unwrap(), 35);
        assert_eq!(count_grassmannian(2, 6, 2).unwrap(), 651);
        assert_eq!(count_grassmannian(2, 4, 3).unwrap(), 130);
        for n in 0..5 {
            assert_eq!(count_grassmannian(0, n, 2).unwrap(), 1);
        }
        assert_eq!(count_grassmannian(3, 2, 2).unwrap(), 0);
        assert!(matches!(
            count_grassmannian(1, 2, 8),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            count_grassmannian(1, 2, 6),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn echelon_walk_agrees_with_spanning_sets() {
        for (k, n, q) in [
            (1, 3, 2),
            (2, 3, 2),
            (2, 4, 2),
            (1, 3, 3),
            (2, 3, 3),
            (1, 2, 4),
            (2, 3, 4),
        ] {
            let want = subspaces_by_spanning_sets(k, n, q) as u64;
            assert_eq!(
                count_grassmannian(k, n, q).unwrap(),
                want,
                "Gr({k},{n}) over GF({q})"
            );
        }
    }

    #[test]
    fn projective_plane_counts() {
        assert_eq!(count_projective_points(2, 2).unwrap(), 7);
        assert_eq!(count_projective_points(2, 3).unwrap(), 13);
        assert_eq!(count_projective_points(2, 4).unwrap(), 21);
        assert_eq!(count_projective_points(1, 5).unwrap(), 6);
    }

    #[test]
    fn plane_points_over_the_quadratic_extension() {
        let p = plane_points(2).unwrap();
        assert_eq!((p.n1, p.n2, p.fixed, p.conjugate_pairs), (7, 21, 7, 7));
        let p = plane_points(3).unwrap();
        assert_eq!((p.n1, p.n2, p.fixed, p.conjugate_pairs), (13, 91, 13, 39));
        for q in 2..=4 {
            let p = plane_points(q).unwrap();
            assert_eq!(p.fixed, p.n1);
            assert_eq!(2 * p.conjugate_pairs, p.n2 - p.n1);
        }
    }

    #[test]
    fn length_two_subschemes() {
        let h = hilb2_p2(2).unwrap();
        assert_eq!(
            (h.rational_pairs, h.conjugate_pairs, h.non_reduced),
            (21, 7, 21)
        );
        assert_eq!(h.total, 49);
        let h = hilb2_p2(3).unwrap();
        assert_eq!(
            (h.rational_pairs, h.conjugate_pairs, h.non_reduced),
            (78, 39, 52)
        );
        assert_eq!(h.total, 169);
        assert!(count_hilb2_p2(5).is_err());
    }

    #[test]
    fn symmetric_square() {
        assert_eq!(count_sym2_p2(2).unwrap(), 35);
        for q in 2..=4 {
            let p = plane_points(q).unwrap();
            assert_eq!(count_sym2_p2(q).unwrap(), (p.n1 * p.n1 + p.n2) / 2);
        }
    }
}
