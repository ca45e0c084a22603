use proptest::prelude::*;

use b4complex::action::{act, phi, theta};
use b4complex::braid::{
    equals, handle_reduce_trivial, w, x_power, ArtinWord, Letter, NormalForm, Word,
};
use b4complex::complex::coset_key;
use b4complex::sampling;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..12, 0..=max_len)
        .prop_map(|v| Word(v.into_iter().map(|i| Letter::ALL[i]).collect()))
}

fn nf(u: &Word) -> NormalForm {
    NormalForm::from_word(u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn equality_agrees_with_handle_reduction(u in word(12), v in word(12)) {
        let trivial = handle_reduce_trivial(&u.multiply(&v.invert()).expand());
        prop_assert_eq!(equals(&u, &v), trivial);
    }

    #[test]
    fn normal_forms_are_valid_and_canonical(u in word(24)) {
        let n = nf(&u);
        prop_assert!(n.is_valid());
        prop_assert_eq!(NormalForm::from_artin(&n.to_artin_word()), n.clone());
        prop_assert!(handle_reduce_trivial(&n.to_artin_word().multiply(&u.expand().invert())));
    }

    #[test]
    fn inverse_cancels(u in word(24)) {
        prop_assert!(equals(&u.multiply(&u.invert()), &Word::identity()));
        prop_assert!(nf(&u).multiply(&nf(&u.invert())).is_identity());
        prop_assert_eq!(nf(&u).inverse(), nf(&u.invert()));
    }

    #[test]
    fn multiplication_matches_concatenation(u in word(16), v in word(16)) {
        prop_assert_eq!(nf(&u).multiply(&nf(&v)), nf(&u.multiply(&v)));
    }

    #[test]
    fn associativity(u in word(10), v in word(10), t in word(10)) {
        let (a, b, c) = (nf(&u), nf(&v), nf(&t));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn equality_is_an_equivalence(u in word(10), v in word(10)) {
        prop_assert!(equals(&u, &u));
        prop_assert_eq!(equals(&u, &v), equals(&v, &u));
    }

    #[test]
    fn exponent_sum_is_additive(u in word(24), v in word(24)) {
        let uv = nf(&u.multiply(&v));
        prop_assert_eq!(uv.exponent_sum(), u.exponent_sum() + v.exponent_sum());
        prop_assert_eq!(nf(&u).exponent_sum(), u.expand().exponent_sum());
    }

    #[test]
    fn x_fourth_is_central(g in word(16)) {
        let x4 = x_power(4);
        prop_assert!(equals(&x4.multiply(&g), &g.multiply(&x4)));
    }

    #[test]
    fn x_power_shortcut(u in word(12), k in -9i64..=9) {
        let mut fast = nf(&u);
        fast.mul_x_power(k);
        let mut slow = nf(&u);
        slow.mul_word(&x_power(k));
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn cosets_absorb_x(u in word(16), k in -4i64..=4) {
        prop_assert_eq!(coset_key(&u.multiply(&x_power(k))), coset_key(&u));
    }

    #[test]
    fn isometry_keys_ignore_the_center(g in word(12), k in -3i64..=3) {
        prop_assert_eq!(phi(&g.multiply(&x_power(4 * k))), phi(&g));
    }

    #[test]
    fn phi_is_left_translation(g in word(10), h in word(10)) {
        let v = coset_key(&h);
        prop_assert_eq!(phi(&g).apply(&v), coset_key(&g.multiply(&h)));
        prop_assert_eq!(act(0, &g, &v), coset_key(&g.multiply(&h)));
    }

    #[test]
    fn theta_is_an_involution_on_vertices(h in word(12)) {
        let v = coset_key(&h);
        prop_assert_eq!(theta().apply(&theta().apply(&v)), v);
    }
}

#[test]
fn canonicity_on_scrambled_pairs() {
    // Pairs (u, scramble(u)) are equal; (u, scramble(u)·ℓ) are not.
    let mut rng = sampling::rng(7);
    for n in 0..1000 {
        let u: ArtinWord = sampling::random_artin_word(&mut rng, 1 + n % 16);
        let v = sampling::scramble(&mut rng, &u, 12, 24);
        assert_eq!(NormalForm::from_artin(&u), NormalForm::from_artin(&v), "{u} vs {v}");
        assert!(handle_reduce_trivial(&u.multiply(&v.invert())));
        let shifted = v.multiply(&w("a").expand());
        assert_ne!(NormalForm::from_artin(&u), NormalForm::from_artin(&shifted));
    }
}
