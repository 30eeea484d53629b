use proptest::prelude::*;

use todd3::gf::{F3, F9};
use todd3::golay;
use todd3::group::{FiniteGroup, GroupElement, Subgroup};
use todd3::monomial;
use todd3::pgroups::{self, Case};
use todd3::sp4ut3::{self, Ut3};
use todd3::strongemb;

fn f9() -> impl Strategy<Value = F9> {
    (0usize..9).prop_map(F9::from_index)
}

fn case() -> impl Strategy<Value = Case> {
    prop::sample::select(Case::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn codewords_closed_and_weights_allowed(a in 0usize..729, b in 0usize..729, s in 0i64..3) {
        let code = &golay::golay().code;
        let (x, y) = (code.codewords()[a], code.codewords()[b]);
        let w = golay::add(&x, &golay::scale(F3::new(s), &y));
        prop_assert!(code.contains(&w));
        prop_assert!([0, 6, 9, 12].contains(&golay::weight(&w)));
        prop_assert!(golay::dot(&x, &y).is_zero());
    }

    #[test]
    fn phi_is_additive(a in 0usize..729, b in 0usize..729) {
        let code = &golay::golay().code;
        let p = golay::phi();
        let (x, y) = (code.codewords()[a], code.codewords()[b]);
        prop_assert_eq!(p.apply(&golay::add(&x, &y)), golay::sym_add(&p.apply(&x), &p.apply(&y)));
    }

    #[test]
    fn m12_preserves_code_and_composes(i in 0usize..190080, j in 0usize..190080, w in 0usize..729) {
        let g = &monomial::m12().group;
        let (x, y) = (g.element(i), g.element(j));
        let v = golay::golay().code.codewords()[w];
        prop_assert!(golay::golay().code.contains(&x.apply(&v)));
        prop_assert_eq!(x.compose(y).apply(&v), x.apply(&y.apply(&v)));
        prop_assert_eq!(g.element(g.mul(i, j)), &x.compose(y));
        prop_assert!(g.element(g.mul(i, g.inv(i))).is_identity());
    }

    #[test]
    fn small_group_associative(c in case(), seed in any::<u64>()) {
        let s = pgroups::s_group(c);
        let n = s.order() as u64;
        let (x, y, z) = ((seed % n) as usize, (seed / 7 % n) as usize, (seed / 101 % n) as usize);
        prop_assert_eq!(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z)));
        prop_assert_eq!(s.mul(x, s.inv(x)), s.identity());
    }

    #[test]
    fn t_acts_by_automorphisms(c in case(), t in 0usize..27, a in 0usize..2187, b in 0usize..2187) {
        let s = pgroups::s_group(c);
        let (t, a, b) = (t % s.t_size(), a % s.a_size(), b % s.a_size());
        prop_assert_eq!(s.act(t, s.a_add(a, b)), s.a_add(s.act(t, a), s.act(t, b)));
    }

    #[test]
    fn sp4_classes_are_conjugation_invariant(i in any::<prop::sample::Index>(), j in 0usize..51840) {
        let sp = &sp4ut3::sp4().sp;
        static ORDER3: std::sync::OnceLock<Vec<usize>> = std::sync::OnceLock::new();
        let order3 = ORDER3.get_or_init(|| Subgroup::whole(sp).elements_of_order(sp, 3));
        let g = sp.element(order3[i.index(order3.len())]);
        let h = sp.element(j);
        prop_assert_eq!(sp4ut3::classify_order3(g).unwrap(), sp4ut3::classify_order3(&h.conjugate(g)).unwrap());
        prop_assert_eq!(sp4ut3::form_sign(g), Some(F3::ONE));
    }

    #[test]
    fn alpha_m_is_an_automorphism(r in f9(), s in f9(), t in f9(), u in f9()) {
        prop_assume!(!(r * u - s * t).is_zero());
        let q = Ut3::new(9).unwrap();
        prop_assert!(q.is_automorphism(&q.alpha_m([[r, s], [t, u]])));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Disconnected isolation graph ⇔ the component stabilizer is strongly
    /// embedded, on random subgroups of A6.
    #[test]
    fn isolation_matches_definition(i in 0usize..360, j in 0usize..360) {
        let a6 = strongemb::testbed::a6();
        let h = Subgroup::generate(&a6, &[i, j]);
        prop_assume!(h.order() % 3 == 0);
        prop_assert!(strongemb::characterizations_agree(&a6, &h, 3).unwrap());
        let sys = strongemb::sylow_p(&a6, &h, 3);
        prop_assert_eq!(sys.count() % 3, 1);
        prop_assert!(strongemb::covers_p_elements(&a6, &h, &sys));
    }
}
