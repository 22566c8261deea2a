//! A small expression language for classes of varieties.
//!
//! ```text
//! expr    := term (('+' | '-') term)* ;
//! term    := factor ('*' factor)* ;
//! factor  := primary ('^' INT)? ;
//! primary := 'L' | INT | 'A' INT | 'P' INT
//!          | 'Gr(' INT ',' INT ')' | 'Hilb' INT
//!          | 'Lin(' INT ')' | 'C(' INT ')' | 'Omega(' INT ',' INT ')'
//!          | 'Sym' INT '(' expr ')' | '(' expr ')' ;
//! ```
//!
//! Integer literals are finite sets of points, so `P1 - 1` is the affine line.

mod parser;

use std::fmt;

pub use parser::parse;

use crate::atoms::AtomKind;
use crate::error::Result;
use crate::ring::MotiveClass;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarietyExpr {
    Atom(AtomKind),
    Lit(u64),
    Lefschetz,
    Sum(Vec<VarietyExpr>),
    /// Kept apart from `Sum` so expressions print the way they were written.
    Diff(Box<VarietyExpr>, Box<VarietyExpr>),
    Prod(Vec<VarietyExpr>),
    Pow(Box<VarietyExpr>, u32),
    Sym(u32, Box<VarietyExpr>),
}

impl VarietyExpr {
    pub fn eval(&self) -> Result<MotiveClass> {
        Ok(match self {
            VarietyExpr::Atom(atom) => atom.class()?,
            VarietyExpr::Lit(n) => MotiveClass::constant(*n),
            VarietyExpr::Lefschetz => MotiveClass::lefschetz(),
            VarietyExpr::Sum(items) => {
                let mut acc = MotiveClass::zero();
                for item in items {
                    acc += item.eval()?;
                }
                acc
            }
            VarietyExpr::Diff(lhs, rhs) => lhs.eval()? - rhs.eval()?,
            VarietyExpr::Prod(items) => {
                let mut acc = MotiveClass::one();
                for item in items {
                    acc *= &item.eval()?;
                }
                acc
            }
            VarietyExpr::Pow(base, exp) => base.eval()?.pow(*exp),
            VarietyExpr::Sym(order, inner) => inner.eval()?.sym_power(*order)?,
        })
    }

    /// Canonical source text; `parse(&e.format())` rebuilds `e` exactly.
    pub fn format(&self) -> String {
        self.to_string()
    }

    fn is_additive(&self) -> bool {
        matches!(self, VarietyExpr::Sum(_) | VarietyExpr::Diff(..))
    }
}

/// Parses and evaluates in one step.
pub fn eval_source(source: &str) -> Result<MotiveClass> {
    parse(source)?.eval()
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &VarietyExpr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for VarietyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyExpr::Atom(atom) => write!(f, "{atom}"),
            VarietyExpr::Lit(n) => write!(f, "{n}"),
            VarietyExpr::Lefschetz => f.write_str("L"),
            VarietyExpr::Sum(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    // a leading difference re-parses as the head of the sum
                    let wrap = match item {
                        VarietyExpr::Sum(_) => true,
                        VarietyExpr::Diff(..) => i > 0,
                        _ => false,
                    };
                    write_wrapped(f, item, wrap)?;
                }
                Ok(())
            }
            VarietyExpr::Diff(lhs, rhs) => {
                write_wrapped(f, lhs, false)?;
                f.write_str(" - ")?;
                write_wrapped(f, rhs, rhs.is_additive())
            }
            VarietyExpr::Prod(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    let wrap = item.is_additive() || matches!(item, VarietyExpr::Prod(_));
                    write_wrapped(f, item, wrap)?;
                }
                Ok(())
            }
            VarietyExpr::Pow(base, exp) => {
                let wrap = !matches!(
                    **base,
                    VarietyExpr::Atom(_)
                        | VarietyExpr::Lit(_)
                        | VarietyExpr::Lefschetz
                        | VarietyExpr::Sym(..)
                );
                write_wrapped(f, base, wrap)?;
                write!(f, "^{exp}")
            }
            VarietyExpr::Sym(order, inner) => write!(f, "Sym{order}({inner})"),
        }
    }
}
