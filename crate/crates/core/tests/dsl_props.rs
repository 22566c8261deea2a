mod common;

use common::*;
use motivic::dsl::{eval_source, parse};
use motivic::{Error, MotiveClass};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn format_then_parse_is_the_identity(e in expr()) {
        parser_round_trip(e)?;
    }

    #[test]
    fn integer_literals_evaluate_to_themselves(n in 0u64..1_000_000) {
        prop_assert_eq!(eval_source(&n.to_string()).unwrap(), MotiveClass::constant(n));
    }

    #[test]
    fn garbage_never_panics(s in "[ -~]{0,24}") {
        let _ = parse(&s);
    }
}

#[test]
fn syntax_errors_carry_an_offset() {
    for (src, offset) in [("Gr(2,", 5), ("P2 +", 4), ("Sym2 P2", 5), ("(P1", 3)] {
        match parse(src) {
            Err(Error::Syntax(e)) => assert_eq!(e.offset, offset, "{src}"),
            other => panic!("{src}: {other:?}"),
        }
    }
}

#[test]
fn arity_errors() {
    for src in ["Gr(3,2)", "Hilb9", "Omega(1,4)", "Lin(0)"] {
        assert!(matches!(parse(src), Err(Error::Arity { .. })), "{src}");
    }
}
