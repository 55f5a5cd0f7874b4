use fcgf_core::catalog::{Family, FamilyType};
use fcgf_core::oracle::{
    canonical, fc_counts, fc_involution_counts, graph, is_canonical, is_self_dual, AlternatingQuery, Column, CoxeterGraph,
    Letter, Shape, TraceClass,
};
use fcgf_core::series::{q_binomial, Comparison, QLaurent, TruncationContext, XSeries};
use fcgf_core::verify::{run_check, CheckId, Config};
use proptest::prelude::*;

const N: usize = 4;

fn ctx() -> TruncationContext {
    TruncationContext::new(N, 24, -40).unwrap()
}

fn poly() -> impl Strategy<Value = QLaurent> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 0..5)).prop_map(|(lo, c)| QLaurent::from_ints(lo, &c))
}

fn series() -> impl Strategy<Value = XSeries> {
    prop::collection::vec(poly(), N + 1).prop_map(|c| XSeries::from_coeffs(c, &ctx()))
}

/// A series whose constant term is `1 + q (...)`.
fn unit_series() -> impl Strategy<Value = XSeries> {
    (series(), prop::collection::vec(-3i64..=3, 0..4)).prop_map(|(s, tail)| {
        let mut c = vec![1];
        c.extend(tail);
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = QLaurent::from_ints(0, &c);
        XSeries::from_coeffs(coeffs, &ctx())
    })
}

fn agree(a: &XSeries, b: &XSeries, q_max: i64) -> Result<(), TestCaseError> {
    match a.compare(b, 0..=N, q_max) {
        Comparison::Equal => Ok(()),
        other => Err(TestCaseError::fail(format!("{other:?}"))),
    }
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        agree(&(&a + &b), &(&b + &a), 20)?;
        agree(&(&a * &b), &(&b * &a), 20)?;
        agree(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 14)?;
        agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), 14)?;
        agree(&(&a - &a), &XSeries::zero(&ctx()), 20)?;
    }

    #[test]
    fn substitution_is_multiplicative(a in series(), b in series(), sign in prop::sample::select(vec![-1i64, 1]), k in -2i64..=2) {
        let lhs = (&a * &b).subst_x(sign, k);
        let rhs = &a.subst_x(sign, k) * &b.subst_x(sign, k);
        agree(&lhs, &rhs, 10)?;
    }

    #[test]
    fn theta_obeys_leibniz(a in series(), b in series()) {
        let lhs = (&a * &b).theta();
        let rhs = &(&a.theta() * &b) + &(&a * &b.theta());
        agree(&lhs, &rhs, 14)?;
    }

    #[test]
    fn inverse_multiplies_to_one(f in unit_series()) {
        let g = f.invert().unwrap();
        agree(&(&f * &g), &XSeries::one(&ctx()), 12)?;
    }

    #[test]
    fn gaussian_binomials(k in 1i64..=7, i in 0i64..=7, step in 1i64..=2) {
        let c = TruncationContext::new(0, 80, -1).unwrap();
        let x = |p: QLaurent| XSeries::constant(p, &c);
        let i = i.min(k);
        prop_assert_eq!(x(q_binomial(k, i, step)).compare(&x(q_binomial(k, k - i, step)), 0..=0, 80), Comparison::Equal);
        let pascal = q_binomial(k - 1, i - 1, step).add(&q_binomial(k - 1, i, step).shift(step * i, &c), &c);
        prop_assert_eq!(x(q_binomial(k, i, step)).compare(&x(pascal), 0..=0, 80), Comparison::Equal);
    }
}

fn small_graph() -> impl Strategy<Value = CoxeterGraph> {
    (prop::sample::select(FamilyType::ALL.to_vec()), 0usize..3).prop_filter_map("group exists", |(ty, extra)| {
        let fam = Family::all(ty);
        let n = fam.first_degree() + extra;
        (fam.generators(n) <= 5).then(|| graph(ty, fam.group_index(n)?).ok()).flatten()
    })
}

fn word_on(g: &CoxeterGraph) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..g.size() as Letter, 0..9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_survive_relabelling(g in small_graph()) {
        prop_assert_eq!(fc_counts(&g, 7).unwrap(), fc_counts(&g.reflected(), 7).unwrap());
        let all = fc_counts(&g, 7).unwrap();
        let inv = fc_involution_counts(&g, 7).unwrap();
        for l in 0..=7 {
            prop_assert!(inv.get(l) <= all.get(l));
        }
    }

    #[test]
    fn normal_forms((g, w) in small_graph().prop_flat_map(|g| { let w = word_on(&g); (Just(g), w) })) {
        let c = canonical(&w, &g);
        prop_assert!(is_canonical(&c, &g));
        prop_assert_eq!(canonical(&c, &g), c.clone());
        let class = TraceClass::new(&w, &g);
        prop_assert_eq!(class.dual(&g).dual(&g), class.clone());
        prop_assert_eq!(is_self_dual(&w, &g), class.dual(&g) == class);
    }

    #[test]
    fn path_columns_are_symmetric(
        n in 1usize..=5,
        first in prop::sample::select(vec![Column::Any, Column::AtMostOne, Column::Odd]),
        last in prop::sample::select(vec![Column::Any, Column::AtMostOne, Column::Odd]),
        self_dual in any::<bool>(),
    ) {
        let q = |a, b| AlternatingQuery::new(Shape::Path(n)).columns(a, b).self_dual(self_dual).count(8).unwrap();
        prop_assert_eq!(q(first, last), q(last, first));
    }
}

#[test]
fn reports_are_deterministic() {
    let config = Config::default();
    for id in ["I5", "X:Dtilde:3", "P:L:3", "Q1:catalan:4"] {
        let id: CheckId = id.parse().unwrap();
        let a = serde_json::to_string(&run_check(id, &config).untimed()).unwrap();
        let b = serde_json::to_string(&run_check(id, &config).untimed()).unwrap();
        assert_eq!(a, b, "{id}");
    }
}
