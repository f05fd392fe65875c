#![allow(dead_code)]

pub mod suites;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tangle_gate::diagram::*;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> TangleDiagram {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    TangleDiagram::load(&std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))).unwrap()
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

/// Random algebraic 4-tangle with at most `max` classical crossings; `virtual_leaves` also
/// allows virtual crossings.
pub fn random_tangle(rng: &mut StdRng, max: usize, virtual_leaves: bool) -> TangleDiagram {
    loop {
        let t = build(rng, max, virtual_leaves, 0);
        if t.crossing_count() <= max && !t.crossings.is_empty() {
            return t;
        }
    }
}

fn build(rng: &mut StdRng, max: usize, virtual_leaves: bool, depth: usize) -> TangleDiagram {
    let leaf = depth >= 3 || max <= 1 || rng.gen_bool(0.35);
    if leaf {
        return match rng.gen_range(0..if virtual_leaves { 5 } else { 4 }) {
            0 => crossing_tangle(rng.gen()),
            1 | 2 => {
                let len = rng.gen_range(1..=3);
                let seq: Vec<i32> = (0..len).map(|_| rng.gen_range(-3..=3)).filter(|&a| a != 0).collect();
                rational_tangle(if seq.is_empty() { &[1] } else { &seq })
            }
            3 => if rng.gen() { horizontal_twist(rng.gen_range(-2..=2)) } else { vertical_twist(rng.gen_range(-2..=2)) },
            _ => virtual_tangle(),
        };
    }
    let a = build(rng, max / 2, virtual_leaves, depth + 1);
    let b = build(rng, max - max / 2, virtual_leaves, depth + 1);
    let t = match rng.gen_range(0..4) {
        0 | 1 => tangle_product(&a, &b).unwrap(),
        2 => tangle_stack(&a, &b).unwrap(),
        _ => rotate(&tangle_product(&a, &b).unwrap()),
    };
    if rng.gen_bool(0.2) { mirror(&t) } else { t }
}

/// Orient and color `t` and `s` so that the numerator of `t + s` is a fully oriented (and,
/// if `colors`, consistently colored) link; returns the oriented `t` and the link.
pub fn oriented_embedding(t: &TangleDiagram, s: &TangleDiagram, colors: bool) -> Option<(TangleDiagram, LinkDiagram)> {
    let (kt, ks) = (t.components.len(), s.components.len());
    if kt + ks > 10 {
        return None;
    }
    let ncol = if colors { 2u32 } else { 1 };
    let choices = |k: usize| -> Vec<(Vec<Option<bool>>, Vec<u32>)> {
        let mut out = Vec::new();
        for bits in 0..1u32 << k {
            for cbits in 0..ncol.pow(k as u32) {
                let o = (0..k).map(|i| Some(bits >> i & 1 == 1)).collect();
                let c = (0..k).map(|i| cbits / ncol.pow(i as u32) % ncol + 1).collect();
                out.push((o, c));
            }
        }
        out
    };
    for (ot, ct) in choices(kt) {
        let mut t2 = t.clone();
        t2.set_orientations(&ot);
        for (c, col) in t2.components.iter_mut().zip(&ct) {
            c.color = Some(*col);
        }
        for (os, cs) in choices(ks) {
            let mut s2 = s.clone();
            s2.set_orientations(&os);
            for (c, col) in s2.components.iter_mut().zip(&cs) {
                c.color = Some(*col);
            }
            let Ok(p) = tangle_product(&t2, &s2) else { return None };
            // Gluing drops data on disagreement, and closing would silently re-orient it.
            if !p.is_oriented() || (colors && !p.is_colored()) {
                continue;
            }
            let Ok((l, warnings)) = close_with_warnings(&p, &Matching::numerator(2)) else { return None };
            if warnings.is_empty() && l.is_oriented() && (!colors || l.is_colored()) {
                if colors && l.components.iter().map(|c| c.color).collect::<std::collections::BTreeSet<_>>().len() < l.components.len().min(2) {
                    continue;
                }
                return Some((t2, l));
            }
        }
    }
    None
}

/// The square tangle (or a mirror/rotation of it) glued to a random piece of at most two
/// crossings: these have nontrivial torsion, unlike most algebraic tangles.
pub fn knotted_tangle(rng: &mut StdRng) -> TangleDiagram {
    let mut sq = fixture("square.tg");
    if rng.gen() {
        sq = mirror(&sq);
    }
    if rng.gen() {
        sq = rotate(&sq);
    }
    let extra = random_tangle(rng, 2, false);
    let t = if rng.gen() { tangle_product(&sq, &extra).unwrap() } else { tangle_stack(&extra, &sq).unwrap() };
    if rng.gen() { t } else { rotate(&t) }
}
