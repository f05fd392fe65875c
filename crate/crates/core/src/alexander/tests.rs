use super::*;
use crate::diagram::{close, rational_tangle, Matching};

const SQUARE: &str = include_str!("../../fixtures/square.tg");

const HAND_RELATIONS: &str = "\
gens a b c d e f g h
rel b + y*a = c + x*b
rel c + x*b = d + y*c
rel d + y*c = e + x*d
rel b + y*h = g + x*b
rel g + x*b = f + y*g
rel f + y*g = e + x*f
";

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn square() -> TangleDiagram {
    TangleDiagram::load(SQUARE).unwrap()
}

fn same_rows(p: &RingMatrix, q: &RingMatrix, perm: &[usize]) -> bool {
    let canon = |r: &[LaurentPoly]| {
        let r: Vec<LaurentPoly> = r.to_vec();
        let neg: Vec<LaurentPoly> = r.iter().map(|x| -x).collect();
        if format!("{r:?}") < format!("{neg:?}") { r } else { neg }
    };
    let mut a: Vec<String> = (0..p.rows()).map(|i| format!("{:?}", canon(&perm.iter().map(|&j| p.get(i, j).clone()).collect::<Vec<_>>()))).collect();
    let mut b: Vec<String> = (0..q.rows()).map(|i| format!("{:?}", canon(q.row(i)))).collect();
    a.sort();
    b.sort();
    a == b
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn square_relations_match_hand_computation() {
    let ours = fox_presentation(&square(), LabelingMode::Colored).unwrap();
    let hand = ModulePresentation::parse(HAND_RELATIONS).unwrap();
    assert_eq!(ours.generator_count(), 8);
    assert!(permutations(8).iter().any(|p| same_rows(&ours.relations, &hand.relations, p)));
}

#[test]
fn square_invariants() {
    let t = square();
    assert_eq!(tau(&t, LabelingMode::Colored).unwrap(), lp("1 - x + x*y").normalize());
    assert_eq!(beta(&t, LabelingMode::Colored).unwrap(), Beta::Value(lp("1 - y + x*y").normalize()));
    for mode in [LabelingMode::Oriented] {
        assert_eq!(tau(&t, mode).unwrap(), lp("x^2 - x + 1"));
        assert_eq!(beta(&t, mode).unwrap(), Beta::Value(lp("x^2 - x + 1")));
    }
    assert_eq!(tau(&t, LabelingMode::Unoriented).unwrap(), lp("3"));
    assert_eq!(beta(&t, LabelingMode::Unoriented).unwrap(), Beta::Value(lp("3")));
}

#[test]
fn reversing_a_strand() {
    let colored = |t: &TangleDiagram| (tau(t, LabelingMode::Colored).unwrap(), beta(t, LabelingMode::Colored).unwrap().value().unwrap().clone());
    let mut t = square();
    t.reverse_component(0);
    let (ta, be) = colored(&t);
    assert!(ta.associate(&lp("x + y - 1")) && be.associate(&lp("x + y - x*y")), "{ta} {be}");
    // reversing the other strand exchanges the two
    let mut t = square();
    t.reverse_component(1);
    let (ta, be) = colored(&t);
    assert!(ta.associate(&lp("x + y - x*y")) && be.associate(&lp("x + y - 1")), "{ta} {be}");
}

#[test]
fn square_closures() {
    let t = square();
    assert_eq!(determinant(&numerator(&t)).unwrap(), 0);
    assert_eq!(determinant(&denominator(&t)).unwrap(), 9);
    let v = close(&t, &Matching::parse("m (1 3)(2 4)").unwrap()).unwrap();
    assert_eq!(determinant(&v).unwrap(), 3);
    assert_eq!(krebes_gcd(&t).unwrap(), 9);
}

#[test]
fn determinants_agree_with_bracket_at_zeta() {
    use crate::ring::AbsNorm;
    for seq in [&[3][..], &[2, 2], &[3, 1, 2], &[2, 3, 1, 2], &[4], &[1, 1, 1], &[-2, 3]] {
        let t = rational_tangle(seq);
        for l in [numerator(&t), denominator(&t)] {
            let AbsNorm::Integer(n) = crate::skein::bracket_at_zeta(&l).unwrap().abs_norm() else { panic!() };
            assert_eq!(determinant(&l).unwrap(), n, "{seq:?}");
        }
    }
}

#[test]
fn trefoil_alexander() {
    let mut k = numerator(&rational_tangle(&[3]));
    k.orient_all();
    assert_eq!(alexander_polynomial(&k, LabelingMode::Oriented).unwrap(), lp("x^2 - x + 1"));
}

#[test]
fn presentation_roundtrip() {
    let p = ModulePresentation::parse(&format!("{HAND_RELATIONS}boundary a d e h\ncomponents a:2 b:1 c:2 d:1 e:2 f:1 g:2 h:2\n")).unwrap();
    let again = ModulePresentation::parse(&p.to_string()).unwrap();
    assert_eq!(p.relations, again.relations);
    assert_eq!(p.boundary, vec![0, 3, 4, 7]);
    assert!(ModulePresentation::parse("gens a\nrel a = q\n").is_err());
    assert!(ModulePresentation::parse("rel a = a\n").is_err());
}

#[test]
fn squarefree() {
    assert_eq!(squarefree_part(17), 17);
    assert_eq!(squarefree_part(9), 3);
    assert_eq!(squarefree_part(72), 6);
    assert_eq!(squarefree_part(1), 1);
}

#[test]
fn square_verdicts() {
    let t = square();
    let mut n = numerator(&t);
    n.orient_all();
    let v = check_embedding_obstruction(&t, &n, LabelingMode::Unoriented).unwrap();
    assert!(!v.obstructed(), "{v}");
    let mut u = numerator(&rational_tangle(&[3]));
    u.orient_all();
    let v = check_embedding_obstruction(&t, &u, LabelingMode::Oriented).unwrap();
    assert!(v.obstructed(), "{v}");
}

#[test]
fn colored_check_needs_the_tangle_colors_in_the_link() {
    let t = square();
    let d = denominator(&t);
    assert!(!colors_compatible(&t, &d));
    assert!(matches!(check_embedding_obstruction(&t, &d, LabelingMode::Colored), Err(Error::Unsupported(_))));
    assert!(!check_embedding_obstruction(&t, &d, LabelingMode::Oriented).unwrap().obstructed());
}
