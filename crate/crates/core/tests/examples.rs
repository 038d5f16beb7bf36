//! Worked examples for each public operation.

mod common;

use common::{farey, filtered, in_bool, in_lower, in_upper, pairs, row};
use farey_core::maps::{
    apply_map, find, lemma_injection, neighbor_check, theorem_preserving_map,
    theorem_reversing_map, verify_map, word_complement_map, word_matrix, Direction, LRWord, Params,
};
use farey_core::{
    cardinality, cardinality_differences, cardinality_full_recursive, check_identity_laws,
    generate, next_term, Frac, Mat2, SeqSpec,
};

fn fr(h: i64, k: i64) -> Frac {
    Frac::new(h, k).unwrap()
}

fn mat(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    Mat2::new(a, b, c, d).unwrap()
}

fn word(s: &str) -> LRWord {
    s.parse().unwrap()
}

#[test]
fn fractions() {
    assert_eq!(fr(0, 1), Frac::ZERO);
    assert_eq!(fr(2, 4), Frac::HALF);
    assert_eq!((fr(3, 7).h(), fr(3, 7).k()), (3, 7));
    assert_eq!(Frac::ZERO.mediant(Frac::ONE).unwrap(), Frac::HALF);
    assert_eq!(fr(1, 3).mediant(fr(1, 2)).unwrap(), fr(2, 5));
    assert_eq!(fr(1, 3).mediant(fr(2, 3)).unwrap(), Frac::HALF);
}

#[test]
fn matrices() {
    assert_eq!(Mat2::J.apply(fr(1, 3)).unwrap(), fr(2, 3));
    assert_eq!(mat(1, 0, 2, 1).apply(Frac::ONE).unwrap(), fr(1, 3));
    assert_eq!(mat(-2, 1, -7, 3).apply(Frac::ZERO).unwrap(), fr(1, 3));
    assert_eq!(Mat2::L.mul(&Mat2::R).unwrap(), mat(0, 1, -1, 3));
    assert_eq!(Mat2::R.mul(&Mat2::L).unwrap(), mat(1, 1, 1, 2));
    assert_eq!(Mat2::IDENTITY.mul(&Mat2::J).unwrap(), Mat2::J);
    assert_eq!(Mat2::L.inverse().unwrap(), mat(1, 0, -1, 1));
    assert_eq!(Mat2::R.inverse().unwrap(), mat(2, -1, 1, 0));
    assert_eq!(Mat2::IDENTITY.inverse().unwrap(), Mat2::IDENTITY);
    assert_eq!(Mat2::L.pow(5).unwrap(), mat(1, 0, 5, 1));
    assert_eq!(Mat2::R.pow(3).unwrap(), mat(-2, 3, -3, 4));
    assert_eq!(Mat2::J.pow(0).unwrap(), Mat2::IDENTITY);
}

#[test]
fn sequences() {
    assert_eq!(
        pairs(generate(&SeqSpec::full(1)).unwrap().terms()),
        row("0/1 1/1")
    );
    assert_eq!(next_term(6, fr(0, 1), fr(1, 6)).unwrap(), fr(1, 5));
    assert_eq!(next_term(6, fr(3, 4), fr(4, 5)).unwrap(), fr(5, 6));
    assert_eq!(next_term(1, Frac::ZERO, Frac::ONE).ok(), None);
    for (n, m) in [(6, 4), (2, 1), (20, 7)] {
        assert!(check_identity_laws(n, m).unwrap().instances() > 0);
    }
    // The same laws, by brute force on (20, 7).
    let (upper, lower, both) = (
        filtered(20, |x| in_upper(20, 7, x)),
        filtered(20, |x| in_lower(20, 7, x)),
        filtered(20, |x| in_bool(20, 7, x)),
    );
    let inter: Vec<_> = upper
        .iter()
        .filter(|x| lower.contains(x))
        .copied()
        .collect();
    assert_eq!(inter, both);
    let mut union = upper.clone();
    union.extend(lower.iter().filter(|x| !upper.contains(x)));
    assert_eq!(union.len(), farey(20).len());
}

#[test]
fn counts() {
    for (spec, n) in [
        (SeqSpec::full(6), 13),
        (SeqSpec::boolean(6, 4), 8),
        (SeqSpec::boolean(8, 4), 13),
        (SeqSpec::full(1), 2),
    ] {
        assert_eq!(cardinality(&spec).unwrap(), n, "{spec}");
    }
    for (n, c) in [(1, 2), (6, 13), (8, 23)] {
        assert_eq!(cardinality_full_recursive(n).unwrap(), c);
    }
    let d = cardinality_differences(30, 11).unwrap();
    let count = |p: &dyn Fn((i64, i64)) -> bool| filtered(30, p).len() as i64;
    let both = count(&|x| in_bool(30, 11, x));
    assert_eq!(d.upper_minus_bool, count(&|x| in_upper(30, 11, x)) - both);
    assert_eq!(d.lower_minus_bool, count(&|x| in_lower(30, 11, x)) - both);
    assert_eq!(d.full_minus_bool, farey(30).len() as i64 - both);
    assert!(d.balanced.is_none());
}

#[test]
fn catalog_entries() {
    let eq35 = find("eq35").unwrap();
    assert_eq!(eq35.matrix, mat(-2, 1, -7, 3));
    assert_eq!(
        eq35.endpoints,
        vec![(Frac::ZERO, fr(1, 3)), (fr(1, 3), Frac::HALF)]
    );
    let eq60 = find("eq60").unwrap();
    assert_eq!(eq60.direction, Direction::Reversing);
    assert_eq!(eq60.fixed_point, Some(fr(2, 5)));

    let j = find("eq1d")
        .unwrap()
        .instantiate(&Params::nm(2, 1))
        .unwrap();
    let dom = generate(&j.domain).unwrap();
    let out = apply_map(&j, &dom).unwrap();
    assert_eq!(pairs(out.image.terms()), row("0/1 1/2 1/1"));

    let eq18 = find("eq18")
        .unwrap()
        .instantiate(&Params::ms(2, 0))
        .unwrap();
    assert!(verify_map(&eq18).unwrap().passed);
    // Independently: [[2,−1],[5,−2]] maps the upper half of bool(4,2) into the lower half of bool(8,4).
    let src = filtered(4, |x| in_bool(4, 2, x) && 2 * x.0 >= x.1);
    let dst = filtered(8, |x| in_bool(8, 4, x) && 2 * x.0 <= x.1);
    assert!(src
        .iter()
        .all(|&(h, k)| dst.contains(&(2 * h - k, 5 * h - 2 * k))));

    let eq74 = verify_map(
        &find("eq74")
            .unwrap()
            .instantiate(&Params::ms(3, 1))
            .unwrap(),
    )
    .unwrap();
    assert!(eq74.passed && !eq74.surjective);
    let eq1 = verify_map(&find("eq1").unwrap().instantiate(&Params::n(6)).unwrap()).unwrap();
    assert!(eq1.passed && eq1.surjective && eq1.direction == Direction::Reversing);
}

#[test]
fn words() {
    assert_eq!(word_matrix(&word("LL")).unwrap(), mat(1, 0, 2, 1));
    assert_eq!(word_matrix(&word("LR")).unwrap(), mat(0, 1, -1, 3));
    assert_eq!(word_matrix(&LRWord::empty()).unwrap(), Mat2::IDENTITY);

    let image = |w: &str, m: i64, n: i64| {
        let h = lemma_injection(&word(w), m, n).unwrap();
        pairs(
            apply_map(&h, &generate(&h.domain).unwrap())
                .unwrap()
                .image
                .terms(),
        )
    };
    assert_eq!(image("LL", 1, 4), row("0/1 1/3"));
    assert_eq!(image("RR", 1, 4), row("2/3 1/1"));
    let r = image("R", 2, 4);
    assert_eq!(r, row("1/2 2/3 1/1"));
    assert!(r.iter().all(|x| farey(4).contains(x)));

    let pre = |a: &str, b: &str| {
        theorem_preserving_map(&word(a), &word(b), 1, 4)
            .unwrap()
            .matrix
    };
    assert_eq!(pre("LL", "LR"), mat(-2, 1, -7, 3));
    assert_eq!(pre("RL", "RL"), Mat2::IDENTITY);
    assert_eq!(pre("RR", "LL"), mat(3, -2, 8, -5));
    let rev = theorem_reversing_map(&word("LR"), &word("LR"), 1, 4).unwrap();
    assert_eq!(rev.matrix, mat(1, 0, 5, -1));
    assert_eq!(rev.matrix.apply(fr(2, 5)).unwrap(), fr(2, 5));
    let rev = theorem_reversing_map(&word("LL"), &word("LR"), 1, 4).unwrap();
    assert_eq!(rev.matrix, mat(-2, 1, -3, 2));
    let degenerate = theorem_reversing_map(&LRWord::empty(), &LRWord::empty(), 6, 6).unwrap();
    assert_eq!(degenerate.matrix, Mat2::J);

    for (w, m, from, to) in [
        ("LL", 2, "0/1 1/4 1/3", "2/3 3/4 1/1"),
        ("L", 2, "0/1 1/3 1/2", "1/2 2/3 1/1"),
    ] {
        let c = word_complement_map(&word(w), m).unwrap();
        let dom = generate(&c.domain).unwrap();
        assert_eq!(pairs(dom.terms()), row(from));
        let out = apply_map(&c, &dom).unwrap();
        assert_eq!(pairs(out.image.terms()), row(to));
        assert_eq!(out.image.terms(), generate(&c.codomain).unwrap().terms());
    }
    let c = word_complement_map(&LRWord::empty(), 6).unwrap();
    let f6 = generate(&SeqSpec::full(6)).unwrap();
    assert_eq!(apply_map(&c, &f6).unwrap().image.terms(), f6.terms());
}

#[test]
fn neighbors() {
    assert!(neighbor_check(generate(&SeqSpec::full(6)).unwrap().terms()).is_ok());
    assert!(neighbor_check(&[fr(1, 3), fr(2, 5), Frac::HALF]).is_ok());
    assert!(neighbor_check(&[Frac::ZERO, fr(1, 3), Frac::HALF]).is_ok());
}
