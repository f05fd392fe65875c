//! Building diagrams: elementary tangles, products, closures and boundary matchings.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{Component, Crossing, CrossingKind, End, Step, TangleDiagram, UnionFind};
use crate::error::{Error, Result};

/// Perfect matching on boundary positions `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort();
        let n2 = 2 * pairs.len();
        let mut seen = vec![false; n2 + 1];
        for &(a, b) in &pairs {
            for p in [a, b] {
                if p == 0 || p > n2 || seen[p] {
                    return Err(Error::Mismatch(format!("position {p} is not matched exactly once")));
                }
                seen[p] = true;
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Half the number of matched points.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// Top ends joined, then bottom ends: `(1 2n)(2 2n-1)…`.
    pub fn numerator(n: usize) -> Self {
        Matching::new((1..=n).map(|i| (i, 2 * n + 1 - i))).unwrap()
    }

    /// Left ends joined in pairs, then right ends: `(1 2)(3 4)…`.
    pub fn denominator(n: usize) -> Self {
        Matching::new((0..n).map(|i| (2 * i + 1, 2 * i + 2))).unwrap()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix('m').unwrap_or(s).trim();
        let mut pairs = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::parse(1, 1, "expected `(`"))?;
            let close = open.find(')').ok_or_else(|| Error::parse(1, 1, "expected `)`"))?;
            let nums: Vec<usize> = open[..close]
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(1, 1, format!("bad position `{t}`"))))
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(Error::parse(1, 1, "each pair needs two positions"));
            }
            pairs.push((nums[0], nums[1]));
            rest = open[close + 1..].trim_start();
        }
        Matching::new(pairs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m ")?;
        for (a, b) in &self.pairs {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

/// All perfect matchings of `1..=2n`, lexicographic by pair list.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    fn rec(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(Matching { pairs: acc.clone() });
            return;
        };
        for i in 0..rest.len() {
            let b = rest[i];
            let others: Vec<usize> = rest.iter().copied().filter(|&x| x != b).collect();
            acc.push((a, b));
            rec(&others, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(&(1..=2 * n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

/// Noncrossing perfect matchings (the Catalan tangles), in the same order.
pub fn catalan_matchings(n: usize) -> Vec<Matching> {
    all_matchings(n).into_iter().filter(Matching::is_noncrossing).collect()
}

/// Crossingless tangle whose arcs realize `m`; crossing chords meet at virtual crossings.
pub fn matching_tangle(m: &Matching) -> TangleDiagram {
    let n = m.n();
    let mut d = TangleDiagram { n, crossings: Vec::new(), boundary: vec![String::new(); 2 * n], components: Vec::new() };
    for (k, &(a, b)) in m.pairs.iter().enumerate() {
        let e = format!("m{}", k + 1);
        d.boundary[a - 1] = e.clone();
        d.boundary[b - 1] = e.clone();
        d.components.push(Component { name: format!("k{}", k + 1), edges: vec![e], orient: None, color: None });
    }
    let mut d = d;
    if !m.is_noncrossing() {
        // Route through the closure machinery so intersections become virtual crossings.
        let empty = TangleDiagram {
            n,
            crossings: Vec::new(),
            boundary: (1..=2 * n).map(|i| format!("p{i}")).collect(),
            components: Vec::new(),
        };
        d = chord_diagram(&empty, m, true).0;
    }
    d
}

/// The 4-tangle with one classical crossing: `[+1]` has its A-smoothing joining NW–NE and
/// SW–SE; `[-1]` is its rotation.
pub fn crossing_tangle(positive: bool) -> TangleDiagram {
    atom(CrossingKind::Unoriented, positive)
}

/// The 4-tangle with one virtual crossing.
pub fn virtual_tangle() -> TangleDiagram {
    atom(CrossingKind::Virtual, true)
}

fn atom(kind: CrossingKind, positive: bool) -> TangleDiagram {
    let b: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    // Slots counterclockwise; the A-smoothing joins slots (1,2) and (3,4).
    let e = if positive {
        [b[1].clone(), b[2].clone(), b[3].clone(), b[0].clone()]
    } else {
        [b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()]
    };
    let comps = vec![
        Component { name: "k1".into(), edges: vec![e[0].clone(), e[2].clone()], orient: None, color: None },
        Component { name: "k2".into(), edges: vec![e[1].clone(), e[3].clone()], orient: None, color: None },
    ];
    let mut d = TangleDiagram {
        n: 2,
        crossings: vec![Crossing { id: "c1".into(), kind, e }],
        boundary: b,
        components: comps,
    };
    fix_listing(&mut d);
    d
}

/// Re-list arcs so that each starts at its boundary end.
fn fix_listing(d: &mut TangleDiagram) {
    let info = EdgeInfo::of(d);
    d.rebuild_components(&info);
}

/// Integer tangle: `k` crossings side by side (`k < 0` uses `[-1]`).
pub fn horizontal_twist(k: i32) -> TangleDiagram {
    let c = crossing_tangle(k > 0);
    let mut t = if k == 0 { zero_tangle() } else { c.clone() };
    for _ in 1..k.unsigned_abs() {
        t = tangle_product(&t, &c).unwrap();
    }
    t
}

/// Vertical twist: `k` crossings stacked.
pub fn vertical_twist(k: i32) -> TangleDiagram {
    let c = crossing_tangle(k > 0);
    let mut t = if k == 0 { infinity_tangle() } else { c.clone() };
    for _ in 1..k.unsigned_abs() {
        t = tangle_stack(&t, &c).unwrap();
    }
    t
}

/// Rational tangle from a Conway-style sequence: alternately stack vertical and add
/// horizontal twists.
pub fn rational_tangle(seq: &[i32]) -> TangleDiagram {
    let mut t = horizontal_twist(seq[0]);
    for (i, &a) in seq[1..].iter().enumerate() {
        t = if i % 2 == 0 {
            tangle_stack(&t, &vertical_twist(a)).unwrap()
        } else {
            tangle_product(&t, &horizontal_twist(a)).unwrap()
        };
    }
    t
}

/// Arcs NW–NE and SW–SE.
pub fn zero_tangle() -> TangleDiagram {
    matching_tangle(&Matching::numerator(2))
}

/// Arcs NW–SW and SE–NE.
pub fn infinity_tangle() -> TangleDiagram {
    matching_tangle(&Matching::denominator(2))
}

fn check_n(s: &TangleDiagram, t: &TangleDiagram) -> Result<()> {
    if s.n != t.n {
        return Err(Error::Mismatch(format!("tangles with n={} and n={}", s.n, t.n)));
    }
    Ok(())
}

/// Disjoint union with ids prefixed so they cannot collide.
fn juxtapose(s: &TangleDiagram, t: &TangleDiagram) -> (TangleDiagram, usize) {
    let pre = |d: &TangleDiagram, p: &str| {
        let mut d = d.clone();
        for c in &mut d.crossings {
            c.id = format!("{p}{}", c.id);
            for e in &mut c.e {
                *e = format!("{p}{e}");
            }
        }
        for e in &mut d.boundary {
            *e = format!("{p}{e}");
        }
        for c in &mut d.components {
            c.name = format!("{p}{}", c.name);
            for e in &mut c.edges {
                *e = format!("{p}{e}");
            }
        }
        d
    };
    let (a, b) = (pre(s, "s."), pre(t, "t."));
    let off = a.boundary.len();
    let mut d = a;
    d.crossings.extend(b.crossings);
    d.boundary.extend(b.boundary);
    d.components.extend(b.components);
    (d, off)
}

/// Glue boundary positions pairwise (0-based) and drop them from the boundary.
fn glue(d: &mut TangleDiagram, pairs: &[(usize, usize)]) {
    for &(p, q) in pairs {
        let (ea, eb) = (d.boundary[p].clone(), d.boundary[q].clone());
        if ea != eb {
            d.rename_edge(&eb, &ea);
        }
    }
    let drop: BTreeSet<usize> = pairs.iter().flat_map(|&(p, q)| [p, q]).collect();
    d.boundary = d.boundary.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, e)| e.clone()).collect();
}

/// Place `t` to the right of `s`: the right boundary points of `s` are glued to the left
/// boundary points of `t` (top to top).
pub fn tangle_product(s: &TangleDiagram, t: &TangleDiagram) -> Result<TangleDiagram> {
    check_n(s, t)?;
    let n = s.n;
    let info = EdgeInfo::of_pair(s, t);
    let (mut d, off) = juxtapose(s, t);
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (2 * n - 1 - i, off + i)).collect();
    // What survives, in order, is the left side of s followed by the right side of t.
    glue(&mut d, &pairs);
    d.rebuild_components(&info);
    Ok(d.canonical_relabel())
}

/// Place `t` below `s` (4-tangles): SW, SE of `s` glued to NW, NE of `t`.
pub fn tangle_stack(s: &TangleDiagram, t: &TangleDiagram) -> Result<TangleDiagram> {
    check_n(s, t)?;
    if s.n != 2 {
        return Err(Error::Unsupported("vertical stacking is defined for 4-tangles".into()));
    }
    let info = EdgeInfo::of_pair(s, t);
    let (mut d, off) = juxtapose(s, t);
    glue(&mut d, &[(1, off), (2, off + 3)]);
    // Survivors in index order: s.NW, s.NE, t.SW, t.SE.
    let b = d.boundary.clone();
    d.boundary = vec![b[0].clone(), b[2].clone(), b[3].clone(), b[1].clone()];
    d.rebuild_components(&info);
    Ok(d.canonical_relabel())
}

/// Rotate the picture one boundary position counterclockwise.
pub fn rotate(t: &TangleDiagram) -> TangleDiagram {
    let mut d = t.clone();
    if !d.boundary.is_empty() {
        d.boundary.rotate_right(1);
    }
    fix_listing(&mut d);
    d
}

/// Mirror image: every classical crossing switched.
pub fn mirror(t: &TangleDiagram) -> TangleDiagram {
    let mut d = t.clone();
    for c in &mut d.crossings {
        if c.kind.is_classical() {
            c.e.rotate_left(1);
        }
    }
    d.reorient();
    d
}

/// Join boundary points along `m`. Crossing chords meet in virtual crossings.
pub fn close(t: &TangleDiagram, m: &Matching) -> Result<TangleDiagram> {
    Ok(close_with_warnings(t, m)?.0)
}

/// [`close`], also reporting dropped orientations or colors.
pub fn close_with_warnings(t: &TangleDiagram, m: &Matching) -> Result<(TangleDiagram, Vec<String>)> {
    if m.n() != t.n {
        return Err(Error::Mismatch(format!("matching on {} points for a tangle with {}", 2 * m.n(), 2 * t.n)));
    }
    Ok(chord_diagram(t, m, false))
}

pub fn numerator(t: &TangleDiagram) -> TangleDiagram {
    close(t, &Matching::numerator(t.n)).expect("numerator matching fits")
}

pub fn denominator(t: &TangleDiagram) -> TangleDiagram {
    close(t, &Matching::denominator(t.n)).expect("denominator matching fits")
}

/// Boundary point `p` (0-based) of the disk carrying the chords. Seen from outside the
/// tangle the boundary runs clockwise; a small irregular offset keeps chord
/// intersections pairwise.
fn chord_point(p: usize, n2: usize, outside: bool) -> (f64, f64) {
    let dir = if outside { -1.0 } else { 1.0 };
    let th = dir * (p as f64) * std::f64::consts::TAU / n2 as f64 + 0.013 * ((p + 2) as f64).sqrt();
    (th.cos(), th.sin())
}

fn seg_param(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> Option<(f64, f64)> {
    let r = (b.0 - a.0, b.1 - a.1);
    let s = (d.0 - c.0, d.1 - c.1);
    let den = r.0 * s.1 - r.1 * s.0;
    if den.abs() < 1e-12 {
        return None;
    }
    let w = (c.0 - a.0, c.1 - a.1);
    let u = (w.0 * s.1 - w.1 * s.0) / den;
    let v = (w.0 * r.1 - w.1 * r.0) / den;
    (u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0).then_some((u, v))
}

/// Attach the chords of `m` outside `t`. With `keep_boundary`, the chords are drawn inside
/// a fresh tangle whose boundary edges are `t`'s (used for crossing matchings as tangles).
fn chord_diagram(t: &TangleDiagram, m: &Matching, keep_boundary: bool) -> (TangleDiagram, Vec<String>) {
    let n2 = 2 * m.n();
    let info = EdgeInfo::of(t);
    let mut d = t.clone();
    let pts: Vec<(f64, f64)> = (0..n2).map(|p| chord_point(p, n2, !keep_boundary)).collect();
    let chords: Vec<(usize, usize)> = m.pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    // Intersections along each chord: (parameter, other chord, crossing index).
    let mut along: Vec<Vec<(f64, usize)>> = vec![Vec::new(); chords.len()];
    let mut xs: Vec<(usize, usize, (f64, f64))> = Vec::new();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            let (a, b) = chords[i];
            let (c, e) = chords[j];
            if let Some((u, v)) = seg_param(pts[a], pts[b], pts[c], pts[e]) {
                let k = xs.len();
                let p = (pts[a].0 + u * (pts[b].0 - pts[a].0), pts[a].1 + u * (pts[b].1 - pts[a].1));
                xs.push((i, j, p));
                along[i].push((u, k));
                along[j].push((v, k));
            }
        }
    }
    // Slot contents per new virtual crossing, keyed by direction angle.
    let mut slots: Vec<Vec<(f64, String)>> = vec![Vec::new(); xs.len()];
    let base = d.crossings.len();
    let mut renames: Vec<(String, String)> = Vec::new();
    for (ci, &(a, b)) in chords.iter().enumerate() {
        let mut hits = along[ci].clone();
        hits.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        let (ea, eb) = (t.boundary[a].clone(), t.boundary[b].clone());
        if hits.is_empty() {
            renames.push((eb, ea));
            continue;
        }
        let mut prev = ea;
        let mut prev_pt = pts[a];
        for (h, &(_, k)) in hits.iter().enumerate() {
            let p = xs[k].2;
            let ang_back = (prev_pt.1 - p.1).atan2(prev_pt.0 - p.0);
            slots[k].push((ang_back, prev.clone()));
            let next = if h + 1 == hits.len() { eb.clone() } else { format!("_v{ci}_{h}") };
            let nxt_pt = if h + 1 == hits.len() { pts[b] } else { xs[hits[h + 1].1].2 };
            let ang_fwd = (nxt_pt.1 - p.1).atan2(nxt_pt.0 - p.0);
            slots[k].push((ang_fwd, next.clone()));
            prev = next;
            prev_pt = p;
        }
    }
    for (k, s) in slots.iter_mut().enumerate() {
        s.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        let e: Vec<String> = s.iter().map(|x| x.1.clone()).collect();
        d.crossings.push(Crossing { id: format!("_w{}", base + k + 1), kind: CrossingKind::Virtual, e: [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()] });
    }
    d.boundary = if keep_boundary { t.boundary.clone() } else { Vec::new() };
    d.merge_edges(renames);
    d.n = d.boundary.len() / 2;
    let warnings = d.rebuild_components(&info);
    (d, warnings)
}

/// Where an edge end sits, by crossing id so it survives re-indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum EndKey {
    Slot(String, usize),
}

/// Orientation and component data of a diagram, keyed by edge id, used to rebuild
/// components after surgery.
#[derive(Clone, Debug, Default)]
pub(crate) struct EdgeInfo {
    /// `(end, is_head)` for oriented edges.
    pub labels: HashMap<String, Vec<(EndKey, bool)>>,
    pub comp: HashMap<String, (String, Option<u32>, bool)>,
    pub order: Vec<String>,
}

impl EdgeInfo {
    pub fn of(d: &TangleDiagram) -> Self {
        let mut info = EdgeInfo::default();
        let key = |e: Option<End>| match e {
            Some(End::Slot(c, s)) => Some(EndKey::Slot(d.crossings[c].id.clone(), s)),
            _ => None,
        };
        for (ci, c) in d.components.iter().enumerate() {
            for e in &c.edges {
                info.comp.insert(e.clone(), (c.name.clone(), c.color, c.orient.is_some()));
                info.order.push(e.clone());
            }
            if c.orient.is_none() {
                continue;
            }
            if let Ok(steps) = d.oriented_steps(ci) {
                for s in steps {
                    let l = info.labels.entry(s.edge.clone()).or_default();
                    if let Some(k) = key(s.tail) {
                        l.push((k, false));
                    }
                    if let Some(k) = key(s.head) {
                        l.push((k, true));
                    }
                }
            }
        }
        info
    }

    fn of_pair(s: &TangleDiagram, t: &TangleDiagram) -> Self {
        let mut out = EdgeInfo::default();
        for (d, p) in [(s, "s."), (t, "t.")] {
            let i = EdgeInfo::of(d);
            for (e, ls) in i.labels {
                out.labels.insert(
                    format!("{p}{e}"),
                    ls.into_iter()
                        .map(|(k, h)| match k {
                            EndKey::Slot(c, sl) => (EndKey::Slot(format!("{p}{c}"), sl), h),
                        })
                        .collect(),
                );
            }
            for (e, (n, c, o)) in i.comp {
                out.comp.insert(format!("{p}{e}"), (format!("{p}{n}"), c, o));
            }
            out.order.extend(i.order.into_iter().map(|e| format!("{p}{e}")));
        }
        out
    }
}

impl TangleDiagram {
    /// Recompute components by tracing strands, carrying over names, colors and
    /// orientations from `info`. Returns warnings for data that had to be dropped.
    pub(crate) fn rebuild_components(&mut self, info: &EdgeInfo) -> Vec<String> {
        let mut warnings = Vec::new();
        let ends = self.ends();
        let mut live: BTreeSet<String> = ends.keys().map(|s| s.to_string()).collect();
        // Listed edges without ends are free loops and keep their identity.
        for c in &self.components {
            for e in &c.edges {
                if !ends.contains_key(e.as_str()) {
                    live.insert(e.clone());
                }
            }
        }
        let idx: HashMap<&str, usize> = self.crossings.iter().enumerate().map(|(i, c)| (c.id.as_str(), i)).collect();
        let resolve = |k: &EndKey| match k {
            EndKey::Slot(c, s) => idx.get(c.as_str()).map(|&i| End::Slot(i, *s)),
        };
        let mut covered: BTreeSet<String> = BTreeSet::new();
        let mut comps: Vec<Component> = Vec::new();
        let mut used_names: BTreeSet<String> = BTreeSet::new();
        let order: Vec<String> = info.order.iter().cloned().chain(live.iter().cloned()).collect();
        for e in order {
            if !live.contains(&e) || covered.contains(&e) {
                continue;
            }
            let mut steps: Vec<Step> = match ends.get(e.as_str()) {
                None => vec![Step { edge: e.clone(), tail: None, head: None }],
                Some(es) => {
                    let (s, closed) = self.walk_from(&ends, &e, es[0]);
                    if closed {
                        s
                    } else {
                        let last = s.last().unwrap();
                        let (s2, _) = self.walk_from(&ends, &last.edge, last.head.unwrap());
                        let (Some(End::Boundary(p0)), Some(End::Boundary(p1))) = (s2[0].tail, s2.last().unwrap().head) else {
                            unreachable!("open strands end on the boundary")
                        };
                        if p0 > p1 {
                            reverse_steps(s2)
                        } else {
                            s2
                        }
                    }
                }
            };
            let (mut agree, mut disagree) = (0, 0);
            for s in &steps {
                for (k, is_head) in info.labels.get(&s.edge).into_iter().flatten() {
                    let Some(end) = resolve(k) else { continue };
                    let at = if *is_head { s.head } else { s.tail };
                    let other = if *is_head { s.tail } else { s.head };
                    if at == Some(end) {
                        agree += 1;
                    } else if other == Some(end) {
                        disagree += 1;
                    }
                }
            }
            let all_oriented = steps.iter().all(|s| info.comp.get(&s.edge).is_none_or(|c| c.2));
            let some_oriented = steps.iter().any(|s| info.comp.get(&s.edge).is_some_and(|c| c.2));
            let orient = if agree > 0 && disagree > 0 {
                warnings.push(format!("orientations disagree along the strand through {e}; dropped"));
                None
            } else if disagree > 0 {
                steps = reverse_steps(steps);
                Some(true)
            } else if agree > 0 || (all_oriented && some_oriented) {
                Some(true)
            } else {
                None
            };
            let colors: BTreeSet<Option<u32>> = steps.iter().filter_map(|s| info.comp.get(&s.edge).map(|c| c.1)).collect();
            let color = match colors.iter().collect::<Vec<_>>().as_slice() {
                [Some(c)] => Some(*c),
                [None] | [] => None,
                _ => {
                    warnings.push(format!("colors disagree along the strand through {e}; dropped"));
                    None
                }
            };
            let base = steps
                .iter()
                .find_map(|s| info.comp.get(&s.edge).map(|c| c.0.clone()))
                .unwrap_or_else(|| format!("k{}", comps.len() + 1));
            let mut name = base.clone();
            let mut i = 2;
            while used_names.contains(&name) {
                name = format!("{base}_{i}");
                i += 1;
            }
            used_names.insert(name.clone());
            for s in &steps {
                covered.insert(s.edge.clone());
            }
            comps.push(Component { name, edges: steps.into_iter().map(|s| s.edge).collect(), orient, color });
        }
        self.components = comps;
        self.reorient();
        warnings
    }

    /// Number of components of `close(self, m)`, by union-find on strand ends.
    pub fn closure_component_count(&self, m: &Matching) -> usize {
        let names: Vec<&str> = self.components.iter().flat_map(|c| c.edges.iter().map(|s| s.as_str())).collect();
        let idx: HashMap<&str, usize> = names.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(names.len());
        for c in &self.crossings {
            uf.union(idx[c.e[0].as_str()], idx[c.e[2].as_str()]);
            uf.union(idx[c.e[1].as_str()], idx[c.e[3].as_str()]);
        }
        for &(a, b) in &m.pairs {
            uf.union(idx[self.boundary[a - 1].as_str()], idx[self.boundary[b - 1].as_str()]);
        }
        uf.classes()
    }
}

fn reverse_steps(mut s: Vec<Step>) -> Vec<Step> {
    s.reverse();
    for st in &mut s {
        std::mem::swap(&mut st.tail, &mut st.head);
    }
    s
}
