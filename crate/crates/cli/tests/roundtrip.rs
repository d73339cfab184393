use proptest::prelude::*;
use symfun::numtheory::PrimeSet;
use symfun::repmodules::SubsetT;
use symfun::symfunc::frac;
use symfun::Partition;
use symfun_cli::expr::{BinOp, Expr, Family, FormKind, UnaryOp};
use symfun_cli::parse::parse;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 1..4).prop_map(|v| Partition::new(v).unwrap())
}

fn family() -> impl Strategy<Value = Family> {
    let primes = prop::sample::subsequence(vec![2u64, 3, 5, 7], 1..3).prop_map(|v| PrimeSet::new(v).unwrap());
    let rule = prop_oneof![
        Just(SubsetT::Explicit(vec![1, 3])),
        (1u64..6).prop_map(SubsetT::AtMost),
        (1u64..7).prop_map(SubsetT::DivisorsOf),
        (2u64..4).prop_map(SubsetT::OneMod),
        (2u64..5).prop_map(SubsetT::PowersOf),
    ];
    prop_oneof![
        Just(Family::Lie),
        Just(Family::Lie2),
        Just(Family::Conj),
        primes.clone().prop_map(Family::L),
        primes.prop_map(Family::Lbar),
        (1u64..5).prop_map(Family::Foulkes),
        rule.prop_map(Family::FT),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-9i64..10, 1i64..5).prop_map(|(a, b)| Expr::Scalar(frac(a, b))),
        partition().prop_map(Expr::P),
        partition().prop_map(Expr::S),
        (0usize..5).prop_map(Expr::H),
        (0usize..5).prop_map(Expr::E),
        (family(), 1usize..6).prop_map(|(f, n)| Expr::Member(f, n)),
        family().prop_map(Expr::Series),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (prop_oneof![Just(UnaryOp::Omega), Just(UnaryOp::Alt), Just(UnaryOp::Ddp1)], inner.clone())
                .prop_map(|(op, x)| Expr::Unary(op, Box::new(x))),
            inner.clone().prop_map(|x| Expr::Neg(Box::new(x))),
            (
                prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Pleth)],
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, a, b)| Expr::Binary(op, Box::new(a), Box::new(b))),
            (
                prop_oneof![
                    Just(FormKind::H),
                    Just(FormKind::E),
                    Just(FormKind::Hpm),
                    Just(FormKind::Epm),
                    Just(FormKind::Inv)
                ],
                inner.clone(),
                1usize..8
            )
                .prop_map(|(k, x, n)| Expr::Form(k, Box::new(x), n)),
            inner.prop_map(|x| Expr::Ge2(Box::new(x))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_inverts_print(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "printed as {}", printed);
    }

    #[test]
    fn ascii_alias_matches(a in partition(), b in partition()) {
        let unicode = parse(&format!("p{a} ∘ s{b}")).unwrap();
        let ascii = parse(&format!("p{a} @ s{b}")).unwrap();
        prop_assert_eq!(unicode, ascii);
    }
}
