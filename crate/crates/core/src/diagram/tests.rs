use super::*;

const TREFOIL: &str = "\
link
x a kind=+ e=1,5,2,4
x b kind=+ e=3,1,4,6
x c kind=+ e=5,3,6,2
component k edges=1,2,3,4,5,6 orient=+
";

fn euler(d: &TangleDiagram) -> i64 {
    let v = d.crossings.len() as i64 + i64::from(d.n > 0);
    let e = d.ends().len() as i64;
    v - e + d.faces().len() as i64
}

#[test]
fn parse_roundtrip() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    assert!(d.is_link());
    assert_eq!(d.crossing_count(), 3);
    let again = TangleDiagram::load(&d.to_string()).unwrap();
    assert_eq!(d, again);
    assert_eq!(d.writhe().unwrap(), 3);
}

#[test]
fn parse_errors_carry_position() {
    let err = TangleDiagram::load("link\nx a kind=? e=1,2,3,4\n").unwrap_err();
    assert!(matches!(err, crate::Error::Parse { line: 2, .. }), "{err:?}");
}

#[test]
fn violations_reported() {
    let bad = "link\nx a kind=u e=1,1,1,2\ncomponent k edges=1,2\n";
    let d = TangleDiagram::parse(bad).unwrap();
    assert!(d.violations().iter().any(|v| v.contains("1")));
    assert!(d.validate().is_err());
}

#[test]
fn matching_counts() {
    let cat: Vec<usize> = (1..=4).map(|n| catalan_matchings(n).len()).collect();
    assert_eq!(cat, [1, 2, 5, 14]);
    let all: Vec<usize> = (1..=4).map(|n| all_matchings(n).len()).collect();
    assert_eq!(all, [1, 3, 15, 105]);
    let m = Matching::parse("m (1 4)(2 3)").unwrap();
    assert_eq!(m, Matching::numerator(2));
    assert_eq!(Matching::parse(&m.to_string()).unwrap(), m);
}

#[test]
fn matching_tangles_are_valid() {
    for n in 1..=3 {
        for m in all_matchings(n) {
            let t = matching_tangle(&m);
            t.validate().unwrap();
            assert_eq!(t.components.len(), n);
            if m.is_noncrossing() {
                assert_eq!(t.crossing_count(), 0);
            } else {
                assert!(t.virtual_count() > 0);
            }
        }
    }
}

#[test]
fn closure_components_match_union_find() {
    let t = rational_tangle(&[2, 3, 1]);
    t.validate().unwrap();
    for m in all_matchings(2) {
        let c = close(&t, &m).unwrap();
        c.validate().unwrap();
        assert!(c.is_link());
        assert_eq!(c.components.len(), t.closure_component_count(&m), "{m}");
    }
}

#[test]
fn twist_closures() {
    // [k] has numerator a (2,k) torus link; its denominator is an unknot diagram.
    for k in 1..=4 {
        let t = horizontal_twist(k);
        assert_eq!(numerator(&t).components.len(), if k % 2 == 0 { 2 } else { 1 });
        assert_eq!(denominator(&t).components.len(), 1);
    }
    assert_eq!(numerator(&zero_tangle()).components.len(), 2);
    assert_eq!(numerator(&infinity_tangle()).components.len(), 1);
}

#[test]
fn products_are_planar() {
    let t = tangle_product(&horizontal_twist(2), &tangle_stack(&vertical_twist(2), &crossing_tangle(false)).unwrap()).unwrap();
    t.validate().unwrap();
    assert_eq!(t.crossing_count(), 5);
    assert_eq!(euler(&t), 2);
    assert_eq!(euler(&numerator(&t)), 2);
    assert_eq!(euler(&rotate(&t)), 2);
    assert_eq!(euler(&mirror(&t)), 2);
}

#[test]
fn mirror_flips_writhe() {
    let mut t = rational_tangle(&[3, 1, 2]);
    t.orient_all();
    let mut n = numerator(&t);
    n.orient_all();
    let mut m = numerator(&mirror(&t));
    m.orient_all();
    assert_eq!(n.writhe().unwrap(), -m.writhe().unwrap());
}

#[test]
fn canonical_relabel_is_stable() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    let r = d.canonical_relabel();
    assert_eq!(r, r.canonical_relabel());
    assert_eq!(r.writhe().unwrap(), 3);
}

#[test]
fn arcs_of_trefoil() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    assert_eq!(d.arcs().len(), 3);
}

#[test]
fn moves_keep_diagrams_planar() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    assert_eq!(euler(&d), 2);
    let moves = legal_moves(&d);
    assert!(moves.iter().any(|m| matches!(m, Move::R2 { .. })));
    for m in &moves {
        let e = d.apply_move(m).unwrap();
        assert_eq!(euler(&e), 2, "{m:?}");
        assert_eq!(e.components.len(), 1, "{m:?}");
        assert!(e.components[0].orient.is_some(), "{m:?}");
    }
}

#[test]
fn r2_insert_then_remove() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    let ins = legal_moves(&d).into_iter().find(|m| matches!(m, Move::R2 { .. })).unwrap();
    let e = d.apply_move(&ins).unwrap();
    assert_eq!(e.crossing_count(), 5);
    let removals: Vec<_> = legal_moves(&e).into_iter().filter(|m| matches!(m, Move::R2Remove { .. })).collect();
    assert!(!removals.is_empty());
    let back = e.apply_move(&removals[0]).unwrap();
    assert_eq!(back.crossing_count(), 3);
}

#[test]
fn r1_changes_writhe() {
    let d = TangleDiagram::load(TREFOIL).unwrap();
    let p = d.apply_move(&Move::R1 { edge: "2".into(), positive: true }).unwrap();
    let n = d.apply_move(&Move::R1 { edge: "2".into(), positive: false }).unwrap();
    assert_eq!(p.writhe().unwrap(), 4);
    assert_eq!(n.writhe().unwrap(), 2);
}

#[test]
fn closing_through_a_boundary_arc() {
    // the arc between SW and SE joins both chords of the denominator closure
    let t = TangleDiagram::load(
        "tangle n=2
x c1 kind=u e=e1,e2,e3,e4
x c2 kind=u e=e3,e2,e5,e6
x c3 kind=u e=e6,e5,e7,e8
x c4 kind=u e=e8,e7,e9,e9
boundary e4 e1 e10 e10
component a edges=e4,e2,e6,e7,e9,e8,e5,e3,e1
component b edges=e10
",
    )
    .unwrap();
    for m in all_matchings(2) {
        let l = close(&t, &m).unwrap();
        l.validate().unwrap();
        assert_eq!(l.components.len(), t.closure_component_count(&m), "{m}");
    }
}

#[test]
fn bigon_next_to_a_kink() {
    let d = TangleDiagram::load(
        "link
x c1 kind=u e=e1,e2,e3,e4
x c2 kind=u e=e2,e5,e6,e3
x c3 kind=u e=e7,e8,e9,e6
x c4 kind=u e=e5,e9,e8,e7
x c5 kind=u e=e10,e10,e1,e4
component a edges=e4,e10,e1,e3,e5,e8,e6,e2
component b edges=e9,e7
",
    )
    .unwrap();
    let e = d.apply_move(&Move::R2Remove { a: "c1".into(), b: "c5".into() }).unwrap();
    e.validate().unwrap();
    assert_eq!(e.crossings.len(), 3);
    assert_eq!(e.components.len(), 2);
}
