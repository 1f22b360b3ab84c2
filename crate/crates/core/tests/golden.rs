//! Hand-checked values for small shapes and the worked examples.

use shiftq::canonical::{canonical_tableau, leading_coefficient, lex_max_content};
use shiftq::classification::{classify, Family, Verdict};
use shiftq::expansion::{
    decompose_row_strip, decompose_single_box, expand, lr_coefficient, monomial_oracle, QExpansion,
};
use shiftq::shapes::{SkewShape, StrictPartition};

fn p(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

fn q(terms: &[(&str, u64)]) -> QExpansion {
    QExpansion::from_terms(terms.iter().map(|&(nu, c)| (p(nu), c)))
}

#[test]
fn q_row_of_two_in_two_variables() {
    let poly = monomial_oracle(&shape("2"), 2);
    assert_eq!(poly.coefficient(&[2, 0]), 2);
    assert_eq!(poly.coefficient(&[1, 1]), 4);
    assert_eq!(poly.coefficient(&[0, 2]), 2);
    assert_eq!(poly.terms.len(), 3);
}

#[test]
fn two_isolated_boxes() {
    // Q_1^2 = 2 Q_2
    assert_eq!(expand(&shape("3,1/2")), q(&[("2", 2)]));
}

#[test]
fn removing_one_box() {
    assert_eq!(expand(&shape("4,2/1")), q(&[("4,1", 1), ("3,2", 1)]));
    assert_eq!(
        decompose_single_box(&p("4,2")),
        q(&[("4,1", 1), ("3,2", 1)])
    );
    assert_eq!(
        decompose_row_strip(&p("4,2"), 1).unwrap(),
        expand(&shape("4,2/1"))
    );
}

#[test]
fn disconnected_example() {
    let s = shape("6,4,3,2,1/5");
    assert_eq!(expand(&s), q(&[("5,3,2,1", 2)]));
    assert_eq!(lr_coefficient(&s, &p("5,3,2,1")).unwrap(), 2);
    assert_eq!(lr_coefficient(&s, &p("5,4,2")).unwrap(), 0);
}

#[test]
fn canonical_example() {
    let c = canonical_tableau(&shape("6,5,3,2/4,1").cells().unwrap()).unwrap();
    assert_eq!(
        c.tableau.to_string(),
        ". . . . 1' 1\n. . 1' 1 1 2\n. . 1 2' 2\n. . . 2 3"
    );
    assert_eq!(c.content(), p("6,4,1"));
    assert_eq!(
        lex_max_content(&shape("6,5,3,2/4,1").cells().unwrap()),
        p("6,4,1")
    );
}

#[test]
fn staircase_minus_partition() {
    let r = classify(&shape("5,4,3,2,1/5,3,2")).unwrap();
    assert_eq!(
        r.verdict,
        Verdict::Homogeneous {
            k: 1,
            nu: p("4,1"),
            family: Family::II
        }
    );
    assert_eq!(r.to_string(), "HOMOGENEOUS k=1 nu=4,1 family=ii");
}

#[test]
fn leading_coefficient_matches_expansion() {
    let s = shape("6,5,2,1/4,3");
    let cells = s.cells().unwrap();
    let e = expand(&s);
    assert_eq!(
        e.coefficient(&lex_max_content(&cells)),
        leading_coefficient(&cells)
    );
    assert!(!classify(&s).unwrap().is_homogeneous());
}

#[test]
fn empty_and_invalid_shapes() {
    assert_eq!(expand(&shape("3,1/3,1")).machine(), "EMPTY_SHAPE 1");
    assert_eq!(expand(&shape("2/3")).machine(), "ZERO");
}
