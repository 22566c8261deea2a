//! Strategies and property bodies shared by the property suites and the
//! acceptance runner.

#![allow(dead_code)]

use motivic::atoms::{grassmannian, AtomKind};
use motivic::dsl::{parse, VarietyExpr};
use motivic::MotiveClass;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

/// Coefficients in `[-9, 9]`, degree at most 12.
pub fn class() -> impl Strategy<Value = MotiveClass> {
    prop::collection::vec(-9i64..=9, 0..=13).prop_map(MotiveClass::from_coeffs)
}

pub fn nonzero_class() -> impl Strategy<Value = MotiveClass> {
    class().prop_filter("nonzero divisor", |c| !c.is_zero())
}

/// Non-negative coefficients, the classes `sym_power` accepts.
pub fn effective_class() -> impl Strategy<Value = MotiveClass> {
    prop::collection::vec(0i64..=9, 0..=9).prop_map(MotiveClass::from_coeffs)
}

pub fn ring_axioms((a, b, c): (MotiveClass, MotiveClass, MotiveClass)) -> Outcome {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a + &(-&a)).is_zero());
    prop_assert_eq!(&a - &b, &a + &(-&b));
    prop_assert_eq!(&a * &MotiveClass::one(), a.clone());
    prop_assert_eq!(&a + &MotiveClass::zero(), a);
    Ok(())
}

pub fn evaluate_is_a_homomorphism((a, b): (MotiveClass, MotiveClass)) -> Outcome {
    for q in [1u32, 2, 3, 5] {
        prop_assert_eq!((&a + &b).evaluate(q), a.evaluate(q) + b.evaluate(q));
        prop_assert_eq!((&a * &b).evaluate(q), a.evaluate(q) * b.evaluate(q));
    }
    prop_assert_eq!(a.euler(), a.evaluate(1));
    Ok(())
}

pub fn exact_div_round_trip((a, b): (MotiveClass, MotiveClass)) -> Outcome {
    let product = &a * &b;
    prop_assert_eq!(product.exact_div(&b).unwrap(), a.clone());
    // a non-multiple either fails or divides back exactly
    let shifted = &product + &MotiveClass::one();
    if let Ok(q) = shifted.exact_div(&b) {
        prop_assert_eq!(&q * &b, shifted);
    }
    Ok(())
}

pub fn sym_square_identity(a: MotiveClass) -> Outcome {
    let s = a.sym_power(2).unwrap();
    for q in [1u32, 2, 3, 5] {
        let x = a.evaluate(q);
        let twice = &x * &x + a.evaluate(q * q);
        prop_assert_eq!(s.evaluate(q) * 2, twice);
    }
    Ok(())
}

fn atom() -> impl Strategy<Value = AtomKind> {
    prop_oneof![
        (0u32..20).prop_map(AtomKind::Affine),
        (0u32..20).prop_map(AtomKind::Projective),
        (0u32..=10)
            .prop_flat_map(|n| (0..=n, Just(n)))
            .prop_map(|(k, n)| AtomKind::Grassmannian { k, n }),
        (0u32..=8).prop_map(AtomKind::HilbP2),
        (1u32..6).prop_map(AtomKind::LinearSystem),
        (1u32..6).prop_map(AtomKind::UniversalCurve),
        prop_oneof![Just((1, 3)), Just((2, 6))]
            .prop_map(|(k, n)| AtomKind::OmegaCurveLocus { k, n }),
    ]
}

/// Trees the parser can produce: sums and products have at least two
/// operands, atoms satisfy their parameter constraints.
pub fn expr() -> impl Strategy<Value = VarietyExpr> {
    let leaf = prop_oneof![
        atom().prop_map(VarietyExpr::Atom),
        (0u64..1000).prop_map(VarietyExpr::Lit),
        Just(VarietyExpr::Lefschetz),
    ];
    leaf.prop_recursive(4, 32, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=4).prop_map(VarietyExpr::Sum),
            prop::collection::vec(inner.clone(), 2..=4).prop_map(VarietyExpr::Prod),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| VarietyExpr::Diff(Box::new(a), Box::new(b))),
            (inner.clone(), 0u32..5).prop_map(|(e, n)| VarietyExpr::Pow(Box::new(e), n)),
            (0u32..4, inner).prop_map(|(n, e)| VarietyExpr::Sym(n, Box::new(e))),
        ]
    })
}

pub fn parser_round_trip(e: VarietyExpr) -> Outcome {
    let text = e.format();
    let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text:?}: {err}")))?;
    prop_assert_eq!(back, e, "source {:?}", text);
    Ok(())
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

pub fn gaussian_symmetry((k, n): (u32, u32)) -> Outcome {
    let g = grassmannian(k, n);
    prop_assert_eq!(&g, &grassmannian(n - k, n));
    prop_assert_eq!(g.euler(), binomial(n, k));
    Ok(())
}

/// `0 <= k <= n <= 10`.
pub fn gr_params() -> impl Strategy<Value = (u32, u32)> {
    (0u32..=10).prop_flat_map(|n| (0..=n, Just(n)))
}
