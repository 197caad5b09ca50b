use proptest::prelude::*;

use tclink::alexander::{alexander_polynomial, unknot_check, UnknotVerdict};
use tclink::artin::{artin_apply, FreeWord};
use tclink::braid::BraidWord;
use tclink::cable::{block_product, cable_lift};
use tclink::garside::{braids_equal, commute_check, garside_delta, normal_form};
use tclink::presentation::{
    abelianization, tietze_eliminate, torus_covering_group, CommutationPolicy, GroupPresentation,
};
use tclink::quandle::{braid_monodromy, torus_colorings, Quandle};
use tclink::quotients::{finite_quotient_count, TargetGroup};
use tclink::ribbon::{verify_decomposition, CableDecomposition};
use tclink::transforms::{h_membership, rho, tau, ChartData, IntMatrix3};

fn word(degree: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = degree as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let letters: Vec<i32> = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
        BraidWord::from_signed(degree, &letters).unwrap()
    })
}

fn sized_word(max_degree: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_degree).prop_flat_map(move |m| word(m, max_len))
}

/// A word that is trivial in the braid group.
fn relation(degree: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = degree as i32 - 1;
    (1..=g, 1..=g, 0..3u8, any::<bool>()).prop_map(move |(i, j, kind, pos)| match kind {
        0 => {
            let s = if pos { i } else { -i };
            vec![s, -s]
        }
        1 if i < g => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        _ if (i - j).abs() >= 2 => vec![i, j, -i, -j],
        _ => vec![-i, i],
    })
}

fn with_relation(max_degree: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_degree).prop_flat_map(|m| {
        (word(m, 10), relation(m), any::<prop::sample::Index>()).prop_map(move |(w, rel, at)| {
            let mut letters = w.signed_letters();
            let at = at.index(letters.len() + 1);
            letters.splice(at..at, rel);
            let v = BraidWord::from_signed(m, &letters).unwrap();
            (w, v)
        })
    })
}

/// Commuting pairs: a few seeds, conjugated by a random braid.
fn commuting_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    let seeds: Vec<(usize, Vec<i32>, Vec<i32>)> = vec![
        (4, vec![1, 3], vec![1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]),
        (4, vec![1, 2, 2, 2, 3], vec![1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]),
        (3, vec![1, 2], vec![1, 2, 1, 2]),
        (2, vec![1, 1, 1], vec![]),
        (4, vec![1], vec![3, 3, -3]),
        (3, vec![1, 1], vec![1, -2, 1, 2, -1]),
    ];
    (0..seeds.len()).prop_flat_map(move |k| {
        let (m, a, b) = seeds[k].clone();
        word(m, 4).prop_map(move |g| {
            let a = BraidWord::from_signed(m, &a).unwrap();
            let b = BraidWord::from_signed(m, &b).unwrap();
            let conj = |x: &BraidWord| g.product(x).unwrap().product(&g.inverse()).unwrap();
            (conj(&a), conj(&b))
        })
    })
    .prop_filter("seed pairs commute", |(a, b)| commute_check(a, b).unwrap())
}

fn boundary(m: usize) -> FreeWord {
    (1..=m).fold(FreeWord::identity(m), |acc, j| acc.product(&FreeWord::generator(m, j).unwrap()))
}

fn small_group(a: &BraidWord, b: &BraidWord) -> GroupPresentation {
    torus_covering_group(a, b, CommutationPolicy::Require).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_ignores_relations((w, v) in with_relation(5)) {
        prop_assert_eq!(normal_form(&w), normal_form(&v));
    }

    #[test]
    fn artin_is_an_automorphism_fixing_the_boundary(beta in sized_word(5, 12)) {
        let m = beta.degree();
        prop_assert_eq!(artin_apply(&beta, &boundary(m)).unwrap(), boundary(m));
        for j in 1..=m {
            let x = FreeWord::generator(m, j).unwrap();
            let y = artin_apply(&beta.inverse(), &artin_apply(&beta, &x).unwrap()).unwrap();
            prop_assert_eq!(y, x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_round_trips(w in sized_word(5, 12)) {
        let nf = normal_form(&w);
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn one_more_letter_is_a_different_braid(w in sized_word(5, 10), i in 1usize..4) {
        let m = w.degree();
        let i = 1 + (i - 1) % (m - 1);
        let v = w.product(&BraidWord::generator(m, i, true).unwrap()).unwrap();
        prop_assert!(!braids_equal(&w, &v).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(5, 8), v in word(5, 8)) {
        let uv = u.product(&v).unwrap();
        prop_assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
        prop_assert_eq!(u.inverse().permutation(), u.permutation().inverse());
    }

    #[test]
    fn full_twist_is_central(w in sized_word(5, 10)) {
        let d2 = garside_delta(w.degree()).unwrap().pow(2);
        prop_assert!(commute_check(&w, &d2).unwrap());
    }

    #[test]
    fn cabling_respects_relations((w, v) in with_relation(4), n in 1usize..=3) {
        let (cw, cv) = (cable_lift(&w, n).unwrap(), cable_lift(&v, n).unwrap());
        prop_assert!(braids_equal(&cw, &cv).unwrap());
    }

    #[test]
    fn cabling_is_multiplicative(u in word(3, 5), v in word(3, 5), n in 1usize..=3) {
        let lhs = cable_lift(&u.product(&v).unwrap(), n).unwrap();
        let rhs = cable_lift(&u, n).unwrap().product(&cable_lift(&v, n).unwrap()).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs).unwrap());
        prop_assert!(braids_equal(&cable_lift(&u.inverse(), n).unwrap(), &cable_lift(&u, n).unwrap().inverse()).unwrap());
    }

    #[test]
    fn monodromy_is_natural((w, v) in with_relation(5), p in prop::sample::select(vec![3usize, 5, 7]), seed in any::<u64>()) {
        let q = Quandle::dihedral(p).unwrap();
        let colors: Vec<u32> = (0..w.degree()).map(|k| ((seed >> (3 * k)) % p as u64) as u32).collect();
        prop_assert_eq!(braid_monodromy(&w, &q, &colors).unwrap(), braid_monodromy(&v, &q, &colors).unwrap());
        let ww = w.product(&v).unwrap();
        let twice = braid_monodromy(&v, &q, &braid_monodromy(&w, &q, &colors).unwrap()).unwrap();
        prop_assert_eq!(braid_monodromy(&ww, &q, &colors).unwrap(), twice);
    }

    #[test]
    fn cable_decompositions_compose_forward(
        r in word(3, 4),
        inner in prop::collection::vec(word(2, 3), 3),
        vertical in prop::collection::vec(prop::sample::select(vec![vec![1], vec![-1], vec![1, 1, 1]]), 3),
    ) {
        let vertical: Vec<BraidWord> = vertical.iter().map(|v| BraidWord::from_signed(2, v).unwrap()).collect();
        let d = CableDecomposition { n: 2, m: 3, tubular: r, interior: inner, vertical };
        let b = d.horizontal_word().unwrap();
        let a = block_product(&d.vertical).unwrap();
        prop_assert!(verify_decomposition(&a, &b, &d).unwrap());
        let back = CableDecomposition::from_text(&d.to_text()).unwrap();
        prop_assert!(verify_decomposition(&a, &b, &back).unwrap());
    }

    #[test]
    fn abelianization_survives_tietze((a, b) in commuting_pair()) {
        let p = small_group(&a, &b);
        let t = tietze_eliminate(&p);
        prop_assert_eq!(abelianization(&p), abelianization(&t));
    }

    #[test]
    fn transforms_keep_pairs_commuting((a, b) in commuting_pair()) {
        let c = ChartData::new(a, b).unwrap();
        let r = rho(&c).unwrap();
        let t = tau(&c).unwrap();
        prop_assert!(commute_check(&r.a, &r.b).unwrap());
        prop_assert!(commute_check(&t.a, &t.b).unwrap());
    }

    #[test]
    fn h_is_closed(factors in prop::collection::vec(0usize..4, 0..10)) {
        let af = IntMatrix3([[1, 0, 0], [0, 0, -1], [0, 1, 0]]);
        let as2 = IntMatrix3([[1, 0, 0], [0, 1, 2], [0, 0, 1]]);
        let gens = [af, af.inverse().unwrap(), as2, as2.inverse().unwrap()];
        let m = factors.iter().fold(IntMatrix3::identity(), |acc, &k| acc * gens[k]);
        prop_assert!(h_membership(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alexander_is_a_markov_invariant(
        beta in sized_word(4, 10).prop_filter("knot", |b| b.permutation().cycle_count() == 1),
        g in word(4, 5),
        positive in any::<bool>(),
    ) {
        let m = beta.degree();
        let base = alexander_polynomial(&beta).unwrap();
        let g = BraidWord::from_signed(m, &g.signed_letters().into_iter().filter(|x| x.unsigned_abs() < m as u32).collect::<Vec<_>>()).unwrap();
        let conj = g.product(&beta).unwrap().product(&g.inverse()).unwrap();
        prop_assert_eq!(alexander_polynomial(&conj).unwrap(), base.clone());
        let mut stab = beta.signed_letters();
        stab.push(if positive { m as i32 } else { -(m as i32) });
        prop_assert_eq!(alexander_polynomial(&BraidWord::from_signed(m + 1, &stab).unwrap()).unwrap(), base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Stabilising the 1-braid repeatedly, with conjugations in between,
    /// always gives the unknot; the check may be undecided but never wrong.
    #[test]
    fn stabilised_trivial_braids_are_never_knotted(
        steps in prop::collection::vec((any::<bool>(), prop::collection::vec((1i32..5, any::<bool>()), 0..3)), 1..5),
    ) {
        let mut beta = BraidWord::identity(1);
        for (positive, conj) in steps {
            let m = beta.degree();
            let mut letters = beta.signed_letters();
            letters.push(if positive { m as i32 } else { -(m as i32) });
            let stab = BraidWord::from_signed(m + 1, &letters).unwrap();
            let g: Vec<i32> = conj
                .into_iter()
                .map(|(i, p)| { let i = 1 + (i - 1) % m as i32; if p { i } else { -i } })
                .collect();
            let g = BraidWord::from_signed(m + 1, &g).unwrap();
            beta = g.product(&stab).unwrap().product(&g.inverse()).unwrap();
        }
        let v = unknot_check(&beta).unwrap();
        prop_assert!(!matches!(v, UnknotVerdict::NotUnknot { .. }), "{} gave {}", beta, v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cyclic_counts_match_abelianization((a, b) in commuting_pair(), k in 2u64..=6) {
        let p = tietze_eliminate(&small_group(&a, &b));
        let counted = finite_quotient_count(&p, TargetGroup::Cyclic(k as usize)).unwrap().homomorphisms;
        let predicted = abelianization(&p).hom_count_to_cyclic(k);
        prop_assert_eq!(num_bigint::BigInt::from(counted), predicted);
    }

    #[test]
    fn invariants_agree_across_rotation_and_double_turn((a, b) in commuting_pair()) {
        let c = ChartData::new(a, b).unwrap();
        let r = rho(&c).unwrap();
        let t2 = tau(&tau(&c).unwrap()).unwrap();
        let q = Quandle::dihedral(3).unwrap();
        let base = small_group(&c.a, &c.b);
        let s3 = |p: &GroupPresentation| finite_quotient_count(&tietze_eliminate(p), TargetGroup::Symmetric(3)).unwrap().homomorphisms;
        for other in [&r, &t2] {
            let p = small_group(&other.a, &other.b);
            prop_assert_eq!(abelianization(&p), abelianization(&base));
            prop_assert_eq!(s3(&p), s3(&base));
            prop_assert_eq!(
                torus_colorings(&other.a, &other.b, &q).unwrap().len(),
                torus_colorings(&c.a, &c.b, &q).unwrap().len()
            );
        }
    }
}

#[test]
fn quandle_axioms_hold_exhaustively() {
    for p in [3, 5, 7] {
        Quandle::dihedral(p).unwrap().check_axioms().unwrap();
    }
}

#[test]
fn colorings_do_not_depend_on_thread_count() {
    let a = BraidWord::from_signed(4, &[1, 2, 2, 2, 3]).unwrap();
    let b = BraidWord::from_signed(4, &[1, 2, 3]).unwrap().pow(4);
    let q = Quandle::dihedral(5).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| torus_colorings(&a, &b, &q).unwrap())
    };
    assert_eq!(run(1), run(4));
}
