//! Reidemeister moves and their virtual counterparts, applied at explicit sites.

use std::collections::{BTreeSet, HashMap};

use super::build::{EdgeInfo, EndKey};
use super::{Crossing, CrossingKind, End, TangleDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Add a kink to `edge`; the positive kink multiplies the bracket by `-A^3`.
    R1 { edge: String, positive: bool },
    /// Push a finger of `over` across `under`; both edges must border a common face.
    R2 { over: String, under: String },
    /// Remove the bigon between two classical crossings.
    R2Remove { a: String, b: String },
    /// Slide a strand across the crossing opposite it in a triangular face.
    R3 { crossings: [String; 3] },
    V1 { edge: String },
    V2 { e1: String, e2: String },
    V2Remove { a: String, b: String },
    V3 { crossings: [String; 3] },
    /// Slide a strand with two virtual crossings across a classical crossing.
    V4 { crossings: [String; 3] },
}

/// A corner of a face: the vertex (`None` = boundary circle) and the slot the face leaves by.
type Corner = (Option<usize>, usize);

impl TangleDiagram {
    fn degree(&self, v: Option<usize>) -> usize {
        match v {
            Some(_) => 4,
            None => self.boundary.len(),
        }
    }

    fn corner_end(&self, (v, i): Corner) -> End {
        match v {
            Some(c) => End::Slot(c, i),
            None => End::Boundary(self.boundary.len() - 1 - i),
        }
    }

    fn end_corner(&self, e: End) -> Corner {
        match e {
            End::Slot(c, s) => (Some(c), s),
            End::Boundary(p) => (None, self.boundary.len() - 1 - p),
        }
    }

    /// Faces of the projection, each a cycle of corners traversed with the face on the left.
    /// Virtual crossings count as vertices; the boundary circle is one more vertex.
    pub(crate) fn faces(&self) -> Vec<Vec<Corner>> {
        let ends = self.ends();
        let mut corners: Vec<Corner> = Vec::new();
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                corners.push((Some(c), s));
            }
        }
        for s in 0..self.boundary.len() {
            corners.push((None, s));
        }
        let mut seen: BTreeSet<Corner> = BTreeSet::new();
        let mut faces = Vec::new();
        for start in corners {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut cur = start;
            while seen.insert(cur) {
                face.push(cur);
                let here = self.corner_end(cur);
                let es = &ends[self.edge_at(here)];
                let other = if es[0] == here { es[1] } else { es[0] };
                let (v, i) = self.end_corner(other);
                let deg = self.degree(v);
                cur = (v, (i + deg - 1) % deg);
            }
            faces.push(face);
        }
        faces
    }

    fn set_end(&mut self, end: End, edge: &str) {
        match end {
            End::Slot(c, s) => self.crossings[c].e[s] = edge.to_string(),
            End::Boundary(p) => self.boundary[p] = edge.to_string(),
        }
    }

    fn fresh_edges(&self, tag: &str, k: usize) -> Vec<String> {
        let used: BTreeSet<&str> = self
            .crossings
            .iter()
            .flat_map(|c| c.e.iter().map(|s| s.as_str()))
            .chain(self.boundary.iter().map(|s| s.as_str()))
            .chain(self.components.iter().flat_map(|c| c.edges.iter().map(|s| s.as_str())))
            .collect();
        (1..).map(|i| format!("{tag}{i}")).filter(|s| !used.contains(s.as_str())).take(k).collect()
    }

    fn fresh_crossing(&self) -> String {
        let used: BTreeSet<&str> = self.crossings.iter().map(|c| c.id.as_str()).collect();
        (1..).map(|k| format!("r{k}")).find(|s| !used.contains(s.as_str())).unwrap()
    }

    fn crossing_index(&self, id: &str) -> Result<usize> {
        self.crossings
            .iter()
            .position(|c| c.id == id)
            .ok_or_else(|| Error::IllegalMove(format!("no crossing {id}")))
    }

    fn purge_edges(&mut self, gone: &BTreeSet<String>) {
        for c in &mut self.components {
            c.edges.retain(|e| !gone.contains(e));
        }
        self.components.retain(|c| !c.edges.is_empty());
    }

    fn two_ends(&self, edge: &str) -> Result<[End; 2]> {
        let ends = self.ends();
        match ends.get(edge).map(|v| v.as_slice()) {
            Some(&[a, b]) => Ok([a, b]),
            _ => Err(Error::IllegalMove(format!("edge {edge} is not an attached edge"))),
        }
    }

    fn kink(&self, edge: &str, kind: CrossingKind, positive: bool) -> Result<Self> {
        let [_, q] = self.two_ends(edge)?;
        let info = EdgeInfo::of(self);
        let mut d = self.clone();
        let [l, eb]: [String; 2] = d.fresh_edges("_k", 2).try_into().unwrap();
        d.set_end(q, &eb);
        let e = edge.to_string();
        let slots = if positive { [e, eb, l.clone(), l] } else { [e, l.clone(), l, eb] };
        let id = d.fresh_crossing();
        d.crossings.push(Crossing { id, kind, e: slots });
        d.rebuild_components(&info);
        Ok(d)
    }

    fn finger(&self, e1: &str, e2: &str, kind: CrossingKind, e1_over: bool) -> Result<Self> {
        if e1 == e2 {
            return Err(Error::IllegalMove("a finger move needs two different edges".into()));
        }
        let faces = self.faces();
        let ends = self.ends();
        let mut site = None;
        'f: for f in &faces {
            let h1 = f.iter().find(|&&c| self.edge_at(self.corner_end(c)) == e1);
            let h2 = f.iter().find(|&&c| self.edge_at(self.corner_end(c)) == e2);
            if let (Some(&h1), Some(&h2)) = (h1, h2) {
                site = Some((h1, h2));
                break 'f;
            }
        }
        let Some((h1, h2)) = site else {
            return Err(Error::IllegalMove(format!("edges {e1} and {e2} share no face")));
        };
        let other = |h: Corner, e: &str| {
            let here = self.corner_end(h);
            let es = &ends[e];
            if es[0] == here {
                es[1]
            } else {
                es[0]
            }
        };
        let (q1, q2) = (other(h1, e1), other(h2, e2));
        let info = EdgeInfo::of(self);
        let mut d = self.clone();
        let [m1, m2, e1b, e2b]: [String; 4] = d.fresh_edges("_m", 4).try_into().unwrap();
        d.set_end(q1, &e1b);
        d.set_end(q2, &e2b);
        let (e1a, e2a) = (e1.to_string(), e2.to_string());
        // Local picture: e1 runs left to right below the face and bulges up across e2,
        // which runs right to left above it.
        let (c1, c2) = if e1_over {
            ([m2.clone(), m1.clone(), e2b, e1a], [e2a, m1, m2, e1b])
        } else {
            ([e1a, m2.clone(), m1.clone(), e2b], [e1b, e2a, m1, m2])
        };
        let id1 = d.fresh_crossing();
        d.crossings.push(Crossing { id: id1, kind, e: c1 });
        let id2 = d.fresh_crossing();
        d.crossings.push(Crossing { id: id2, kind, e: c2 });
        d.rebuild_components(&info);
        Ok(d)
    }

    fn unfinger(&self, a: &str, b: &str, classical: bool) -> Result<Self> {
        let (ia, ib) = (self.crossing_index(a)?, self.crossing_index(b)?);
        if ia == ib {
            return Err(Error::IllegalMove("two different crossings are needed".into()));
        }
        let (ca, cb) = (&self.crossings[ia], &self.crossings[ib]);
        let want = if classical { "classical" } else { "virtual" };
        if ca.kind.is_classical() != classical || cb.kind.is_classical() != classical {
            return Err(Error::IllegalMove(format!("crossings {a}, {b} are not both {want}")));
        }
        let shared: Vec<(usize, usize)> = (0..4)
            .flat_map(|s| (0..4).map(move |t| (s, t)))
            .filter(|&(s, t)| ca.e[s] == cb.e[t])
            .collect();
        let names: BTreeSet<&str> = shared.iter().map(|&(s, _)| ca.e[s].as_str()).collect();
        if shared.len() != 2 || names.len() != 2 {
            return Err(Error::IllegalMove(format!("crossings {a}, {b} do not bound a bigon")));
        }
        let (s1, t1) = shared[0];
        let (s2, t2) = shared[1];
        if (s1 + 2) % 4 == s2 || (t1 + 2) % 4 == t2 {
            return Err(Error::IllegalMove(format!("crossings {a}, {b} do not bound a bigon")));
        }
        if classical && !((s1 % 2 == t1 % 2) && (s2 % 2 == t2 % 2)) {
            return Err(Error::IllegalMove(format!("one strand must pass over at both {a} and {b}")));
        }
        let mids: BTreeSet<String> = [ca.e[s1].clone(), ca.e[s2].clone()].into();
        let (x1, y1) = (ca.e[(s1 + 2) % 4].clone(), cb.e[(t1 + 2) % 4].clone());
        let (x2, y2) = (ca.e[(s2 + 2) % 4].clone(), cb.e[(t2 + 2) % 4].clone());
        if [&x1, &y1, &x2, &y2].iter().any(|e| mids.contains(*e)) {
            return Err(Error::IllegalMove("bigon strands close up on themselves".into()));
        }
        let info = EdgeInfo::of(self);
        let mut d = self.clone();
        d.crossings.retain(|c| c.id != a && c.id != b);
        d.purge_edges(&mids);
        d.merge_edges([(y1, x1), (y2, x2)]);
        for c in &mut d.components {
            let mut seen = BTreeSet::new();
            c.edges.retain(|e| seen.insert(e.clone()));
        }
        d.rebuild_components(&info);
        Ok(d)
    }

    fn triangle(&self, ids: &[String; 3], classical_count: usize) -> Result<Self> {
        let idx: Vec<usize> = ids.iter().map(|i| self.crossing_index(i)).collect::<Result<_>>()?;
        let set: BTreeSet<usize> = idx.iter().copied().collect();
        if set.len() != 3 {
            return Err(Error::IllegalMove("three different crossings are needed".into()));
        }
        let face = self
            .faces()
            .into_iter()
            .find(|f| f.len() == 3 && f.iter().all(|c| c.0.is_some_and(|v| set.contains(&v))) && {
                let vs: BTreeSet<usize> = f.iter().map(|c| c.0.unwrap()).collect();
                vs.len() == 3
            })
            .ok_or_else(|| Error::IllegalMove("the crossings do not bound a triangular face".into()))?;
        let classical = idx.iter().filter(|&&i| self.crossings[i].kind.is_classical()).count();
        if classical != classical_count {
            return Err(Error::IllegalMove(format!(
                "triangle has {classical} classical crossings, the move needs {classical_count}"
            )));
        }
        // Hexagon of outer ends, counterclockwise around the triangle; chord c joins
        // positions c and c+3.
        let mut outer: Vec<(String, usize, usize)> = Vec::new();
        for &(v, i) in &face {
            let c = v.unwrap();
            for s in [(i + 2) % 4, (i + 3) % 4] {
                outer.push((self.crossings[c].e[s].clone(), c, s));
            }
        }
        // Kind of each chord pair and which chord is over.
        let mut pair: HashMap<(usize, usize), (CrossingKind, usize)> = HashMap::new();
        for (k, &(v, i)) in face.iter().enumerate() {
            let c = v.unwrap();
            let (ca, cb) = ((2 * k) % 3, (2 * k + 1) % 3);
            let over = if (i + 2) % 2 == 1 { ca } else { cb };
            let kind = self.crossings[c].kind;
            pair.insert((ca.min(cb), ca.max(cb)), (kind, over));
        }
        if classical == 3 {
            let over_both = (0..3).any(|ch| {
                pair.iter().filter(|(k, _)| k.0 == ch || k.1 == ch).all(|(_, v)| v.1 == ch)
            });
            if !over_both {
                return Err(Error::IllegalMove("no strand passes over both of its crossings".into()));
            }
        }
        let info0 = EdgeInfo::of(self);
        let mut d = self.clone();
        let inner_old: BTreeSet<String> = face.iter().map(|&(v, i)| self.crossings[v.unwrap()].e[i].clone()).collect();
        let inner = d.fresh_edges("_t", 3);
        let mut relabel: HashMap<(String, usize), (String, usize)> = HashMap::new();
        let mut newx = Vec::new();
        let mut taken: BTreeSet<String> = d.crossings.iter().map(|c| c.id.clone()).collect();
        for side in [1usize, 3, 5] {
            let (pi, pj) = (side, (side + 1) % 6);
            let (ci, cj) = (pi % 3, pj % 3);
            let (kind, over) = pair[&(ci.min(cj), ci.max(cj))];
            let mut e = [outer[pi].0.clone(), outer[pj].0.clone(), inner[ci].clone(), inner[cj].clone()];
            let mut pos = [pi, pj, usize::MAX, usize::MAX];
            if kind.is_classical() && over == ci {
                e.rotate_left(1);
                pos.rotate_left(1);
            }
            let id = (1..).map(|k| format!("r{k}")).find(|s| !taken.contains(s)).unwrap();
            taken.insert(id.clone());
            for (slot, &p) in pos.iter().enumerate() {
                if p != usize::MAX {
                    let (_, c, s) = &outer[p];
                    relabel.insert((self.crossings[*c].id.clone(), *s), (id.clone(), slot));
                }
            }
            let kind = if kind.is_classical() { CrossingKind::Unoriented } else { kind };
            newx.push(Crossing { id, kind, e });
        }
        d.crossings.retain(|c| !ids.contains(&c.id));
        d.crossings.extend(newx);
        d.purge_edges(&inner_old);
        let mut info = info0;
        for ls in info.labels.values_mut() {
            for (k, _) in ls.iter_mut() {
                let EndKey::Slot(c, s) = k;
                if let Some((nc, ns)) = relabel.get(&(c.clone(), *s)) {
                    *k = EndKey::Slot(nc.clone(), *ns);
                }
            }
        }
        d.rebuild_components(&info);
        Ok(d)
    }

    /// Apply `m`; the result is validated.
    pub fn apply_move(&self, m: &Move) -> Result<Self> {
        let d = match m {
            Move::R1 { edge, positive } => self.kink(edge, CrossingKind::Unoriented, *positive)?,
            Move::V1 { edge } => self.kink(edge, CrossingKind::Virtual, true)?,
            Move::R2 { over, under } => self.finger(over, under, CrossingKind::Unoriented, true)?,
            Move::V2 { e1, e2 } => self.finger(e1, e2, CrossingKind::Virtual, true)?,
            Move::R2Remove { a, b } => self.unfinger(a, b, true)?,
            Move::V2Remove { a, b } => self.unfinger(a, b, false)?,
            Move::R3 { crossings } => self.triangle(crossings, 3)?,
            Move::V3 { crossings } => self.triangle(crossings, 0)?,
            Move::V4 { crossings } => self.triangle(crossings, 1)?,
        };
        d.validate()?;
        Ok(d)
    }
}

/// Every move site of the diagram that [`TangleDiagram::apply_move`] accepts.
pub fn legal_moves(d: &TangleDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    let ends = d.ends();
    let mut edges: Vec<&str> = ends.keys().copied().collect();
    edges.sort();
    for e in &edges {
        out.push(Move::R1 { edge: e.to_string(), positive: true });
        out.push(Move::R1 { edge: e.to_string(), positive: false });
        out.push(Move::V1 { edge: e.to_string() });
    }
    let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
    for f in d.faces() {
        let fe: Vec<String> = f.iter().map(|&c| d.edge_at(d.corner_end(c)).to_string()).collect();
        for a in &fe {
            for b in &fe {
                if a != b {
                    pairs.insert((a.clone(), b.clone()));
                }
            }
        }
        if f.len() == 3 && f.iter().all(|c| c.0.is_some()) {
            let ids: Vec<String> = f.iter().map(|c| d.crossings[c.0.unwrap()].id.clone()).collect();
            let arr = [ids[0].clone(), ids[1].clone(), ids[2].clone()];
            for mv in [Move::R3 { crossings: arr.clone() }, Move::V3 { crossings: arr.clone() }, Move::V4 { crossings: arr }] {
                if d.apply_move(&mv).is_ok() {
                    out.push(mv);
                }
            }
        }
    }
    for (a, b) in pairs {
        if a < b {
            out.push(Move::V2 { e1: a.clone(), e2: b.clone() });
        }
        out.push(Move::R2 { over: a, under: b });
    }
    for i in 0..d.crossings.len() {
        for j in i + 1..d.crossings.len() {
            let (a, b) = (d.crossings[i].id.clone(), d.crossings[j].id.clone());
            for mv in [Move::R2Remove { a: a.clone(), b: b.clone() }, Move::V2Remove { a, b }] {
                if d.apply_move(&mv).is_ok() {
                    out.push(mv);
                }
            }
        }
    }
    out
}

impl TangleDiagram {
    /// Exchange over and under strands at crossing `ci`.
    pub fn switch_crossing(&self, ci: usize) -> Self {
        let mut d = self.clone();
        d.crossings[ci].e.rotate_left(1);
        if d.crossings[ci].kind != CrossingKind::Virtual {
            d.crossings[ci].kind = CrossingKind::Unoriented;
        }
        d.reorient();
        d
    }

    /// Orientation-respecting smoothing of the oriented classical crossing `ci`.
    pub fn smooth_oriented(&self, ci: usize) -> Self {
        let info = EdgeInfo::of(self);
        let mut d = self.clone();
        let c = d.crossings.remove(ci);
        let pairs = if c.kind == CrossingKind::Positive { [(0, 1), (3, 2)] } else { [(0, 3), (1, 2)] };
        let mut info = info;
        for (b, a) in d.merge_edges(pairs.map(|(i, j)| (c.e[j].clone(), c.e[i].clone()))) {
            if let Some(ls) = info.labels.remove(&b) {
                info.labels.entry(a).or_default().extend(ls);
            }
        }
        for c in &mut d.components {
            let mut seen = BTreeSet::new();
            c.edges.retain(|e| seen.insert(e.clone()));
        }
        d.rebuild_components(&info);
        d
    }
}
