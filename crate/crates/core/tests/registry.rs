mod common;

use common::{act, farey, filtered, in_bool, mul};
use farey_core::maps::{find, registry, theorem_reversing_map, LRWord, Params};

type M = [[i64; 2]; 2];

const I: M = [[1, 0], [0, 1]];
const L: M = [[1, 0], [1, 1]];
const R: M = [[0, 1], [-1, 2]];
const J: M = [[-1, 1], [0, 1]];

fn inv(m: M) -> M {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [
        [m[1][1] * det, -m[0][1] * det],
        [-m[1][0] * det, m[0][0] * det],
    ]
}

fn matrix(id: &str) -> M {
    find(id).unwrap().matrix.entries()
}

#[test]
fn manifest() {
    let mut expected: Vec<String> = [
        "eq1", "eq1b", "eq1c", "eq1d", "prop2a", "prop2b", "prop2c", "prop2d",
    ]
    .map(String::from)
    .into();
    expected.extend(
        [
            "eq4", "eq15", "eq4inv", "eq15inv", "eq16", "eq5", "eq16inv", "eq5inv", "eq6", "eq7",
            "eq8", "eq9",
        ]
        .map(String::from),
    );
    expected.extend((74..=81).map(|i| format!("eq{i}")));
    expected.extend(
        [17, 18]
            .into_iter()
            .chain(21..=34)
            .map(|i| format!("eq{i}")),
    );
    expected.extend((35..=62).map(|i| format!("eq{i}")));
    let ids: Vec<&str> = registry().iter().map(|e| e.id).collect();
    assert_eq!(ids, expected);
    assert_eq!(ids.len(), 72);
    assert!(find("eq19").is_err());
}

#[test]
fn complements_are_j() {
    for id in [
        "eq1", "eq1b", "eq1c", "eq1d", "prop2a", "prop2b", "prop2c", "prop2d",
    ] {
        assert_eq!(matrix(id), J, "{id}");
    }
}

#[test]
fn half_maps_are_products_of_generators() {
    let table: [(&str, M); 12] = [
        ("eq4", L),
        ("eq15", R),
        ("eq4inv", inv(L)),
        ("eq15inv", inv(R)),
        ("eq16", mul(L, J)),
        ("eq5", mul(R, J)),
        ("eq16inv", inv(mul(L, J))),
        ("eq5inv", inv(mul(R, J))),
        ("eq6", mul(mul(L, J), inv(L))),
        ("eq7", mul(mul(R, J), inv(R))),
        ("eq8", mul(R, inv(L))),
        ("eq9", mul(L, inv(R))),
    ];
    for (id, m) in table {
        assert_eq!(matrix(id), m, "{id}");
    }
}

#[test]
fn dyadic_step_maps_compose() {
    let table: [(&str, M); 16] = [
        ("eq17", L),
        ("eq18", mul(L, matrix("eq9"))),
        ("eq21", mul(L, matrix("eq8"))),
        ("eq22", L),
        ("eq23", R),
        ("eq24", mul(R, matrix("eq9"))),
        ("eq25", mul(R, matrix("eq8"))),
        ("eq26", R),
        ("eq27", mul(L, matrix("eq6"))),
        ("eq28", mul(mul(L, matrix("eq9")), matrix("eq7"))),
        ("eq29", mul(mul(L, matrix("eq8")), matrix("eq6"))),
        ("eq30", mul(L, matrix("eq7"))),
        ("eq31", mul(R, matrix("eq6"))),
        ("eq32", mul(mul(R, matrix("eq9")), matrix("eq7"))),
        ("eq33", mul(mul(R, matrix("eq8")), matrix("eq6"))),
        ("eq34", mul(R, matrix("eq7"))),
    ];
    for (id, m) in table {
        assert_eq!(matrix(id), m, "{id}");
    }
}

#[test]
fn two_letter_maps_follow_words() {
    let words = [mul(L, L), mul(L, R), mul(R, L), mul(R, R)];
    for (i, w) in words.iter().enumerate() {
        assert_eq!(matrix(&format!("eq{}", 74 + i)), *w);
        assert_eq!(matrix(&format!("eq{}", 78 + i)), mul(*w, J));
        assert_eq!(matrix(&format!("eq{}", 59 + i)), mul(mul(*w, J), inv(*w)));
    }
    let mut id = 35;
    for reversing in [false, true] {
        for (a, wa) in words.iter().enumerate() {
            for (b, wb) in words.iter().enumerate() {
                if a == b {
                    continue;
                }
                let expected = if reversing {
                    mul(mul(*wb, J), inv(*wa))
                } else {
                    mul(*wb, inv(*wa))
                };
                assert_eq!(matrix(&format!("eq{id}")), expected, "eq{id}");
                id += 1;
            }
        }
    }
    assert_eq!(id, 59);
}

#[test]
fn self_maps_are_involutions_with_declared_fixed_points() {
    for (id, word, fixed) in [
        ("eq59", "LL", (1, 4)),
        ("eq60", "LR", (2, 5)),
        ("eq61", "RL", (3, 5)),
        ("eq62", "RR", (3, 4)),
    ] {
        let m = matrix(id);
        assert_eq!(mul(m, m), I, "{id}");
        assert_eq!(act(m, fixed), fixed, "{id}");
        let e = find(id).unwrap().instantiate(&Params::ms(1, 1)).unwrap();
        assert_eq!(
            (e.fixed_point.unwrap().h(), e.fixed_point.unwrap().k()),
            fixed
        );
        let w: LRWord = word.parse().unwrap();
        let th = theorem_reversing_map(&w, &w, 1, 4).unwrap();
        assert_eq!(th.matrix.entries(), m, "{id}");
    }
}

#[test]
fn left_generator_maps_full_onto_lower_half() {
    for m in 1..=12 {
        let image: Vec<_> = farey(m).into_iter().map(|x| act(L, x)).collect();
        let half = filtered(2 * m, |x| in_bool(2 * m, m, x) && 2 * x.0 <= x.1);
        assert_eq!(image, half, "m={m}");
        let image: Vec<_> = farey(m).into_iter().map(|x| act(R, x)).collect();
        let half = filtered(2 * m, |x| in_bool(2 * m, m, x) && 2 * x.0 >= x.1);
        assert_eq!(image, half, "m={m}");
    }
}

#[test]
fn instantiate_rejects_wrong_params() {
    let eq35 = find("eq35").unwrap();
    assert!(eq35.instantiate(&Params::ms(1, 1)).is_ok());
    assert!(eq35.instantiate(&Params::m(1)).is_err());
    assert!(find("eq1").unwrap().instantiate(&Params::nm(5, 2)).is_err());
    assert!(find("eq1").unwrap().instantiate(&Params::n(5)).is_ok());
}
