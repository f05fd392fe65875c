//! Classical and virtual tangle diagrams in planar-diagram form.
//!
//! A crossing lists four edge ids counterclockwise. For a classical crossing the
//! under-strand occupies slots 1 and 3; when the diagram is oriented, slot 1 is the
//! incoming under-strand and the sign is `+` iff the over-strand runs from slot 4 to slot 2.
//! Boundary points are listed counterclockwise starting at the top-left, so for a
//! 4-tangle the positions are NW, SW, SE, NE.

mod build;
mod moves;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub use build::*;
pub use moves::{legal_moves, Move};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    /// Classical, sign not recorded.
    Unoriented,
    Virtual,
}

impl CrossingKind {
    pub fn is_classical(self) -> bool {
        self != CrossingKind::Virtual
    }

    fn symbol(self) -> &'static str {
        match self {
            CrossingKind::Positive => "+",
            CrossingKind::Negative => "-",
            CrossingKind::Unoriented => "u",
            CrossingKind::Virtual => "v",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub id: String,
    pub kind: CrossingKind,
    pub e: [String; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    /// Edges in traversal order.
    pub edges: Vec<String>,
    /// `Some(true)`: oriented along the listed order; `Some(false)`: against it.
    pub orient: Option<bool>,
    pub color: Option<u32>,
}

/// A 2n-tangle diagram; `n = 0` is a link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleDiagram {
    pub n: usize,
    pub crossings: Vec<Crossing>,
    pub boundary: Vec<String>,
    pub components: Vec<Component>,
}

pub type LinkDiagram = TangleDiagram;

/// Where an edge ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    /// Crossing index and slot `0..4`.
    Slot(usize, usize),
    /// Boundary position `0..2n`.
    Boundary(usize),
}

/// One edge traversed from `tail` to `head`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub edge: String,
    pub tail: Option<End>,
    pub head: Option<End>,
}

impl TangleDiagram {
    pub fn is_link(&self) -> bool {
        self.n == 0
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.kind.is_classical()).count()
    }

    pub fn virtual_count(&self) -> usize {
        self.crossings.len() - self.crossing_count()
    }

    pub fn is_classical(&self) -> bool {
        self.virtual_count() == 0
    }

    pub fn is_oriented(&self) -> bool {
        self.components.iter().all(|c| c.orient.is_some())
    }

    pub fn is_colored(&self) -> bool {
        self.components.iter().all(|c| c.color.is_some())
    }

    pub fn component_of_edge(&self) -> HashMap<&str, usize> {
        let mut m = HashMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for e in &c.edges {
                m.insert(e.as_str(), i);
            }
        }
        m
    }

    /// Ends of every edge that occurs in a crossing slot or on the boundary.
    pub fn ends(&self) -> HashMap<&str, Vec<End>> {
        let mut m: HashMap<&str, Vec<End>> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (s, e) in c.e.iter().enumerate() {
                m.entry(e.as_str()).or_default().push(End::Slot(ci, s));
            }
        }
        for (p, e) in self.boundary.iter().enumerate() {
            m.entry(e.as_str()).or_default().push(End::Boundary(p));
        }
        m
    }

    pub fn edge_at(&self, end: End) -> &str {
        match end {
            End::Slot(c, s) => &self.crossings[c].e[s],
            End::Boundary(p) => &self.boundary[p],
        }
    }

    /// Follow the strand starting with `edge`, leaving through the end opposite `tail`.
    fn walk_from(&self, ends: &HashMap<&str, Vec<End>>, edge: &str, tail: End) -> (Vec<Step>, bool) {
        let mut steps = Vec::new();
        let (mut e, mut t) = (edge.to_string(), tail);
        loop {
            let es = &ends[e.as_str()];
            let head = if es[0] == t { es[1] } else { es[0] };
            steps.push(Step { edge: e.clone(), tail: Some(t), head: Some(head) });
            match head {
                End::Boundary(_) => return (steps, false),
                End::Slot(c, s) => {
                    let nt = End::Slot(c, (s + 2) % 4);
                    let ne = self.crossings[c].e[(s + 2) % 4].clone();
                    if ne == edge && nt == tail {
                        return (steps, true);
                    }
                    if steps.len() > 4 * self.crossings.len() + 2 {
                        return (steps, false);
                    }
                    e = ne;
                    t = nt;
                }
            }
        }
    }

    /// Steps of component `ci` in its listed order (not its orientation).
    pub fn component_steps(&self, ci: usize) -> std::result::Result<Vec<Step>, String> {
        let comp = &self.components[ci];
        let ends = self.ends();
        let Some(first) = comp.edges.first() else {
            return Err(format!("component {} has no edges", comp.name));
        };
        let Some(es) = ends.get(first.as_str()) else {
            if comp.edges.len() == 1 {
                return Ok(vec![Step { edge: first.clone(), tail: None, head: None }]);
            }
            return Err(format!("component {}: edge {first} is not attached", comp.name));
        };
        if es.len() != 2 {
            return Err(format!("edge {first} has {} ends", es.len()));
        }
        let mut tails = vec![es[0], es[1]];
        if es.iter().all(|e| matches!(e, End::Boundary(_))) {
            tails.sort();
        }
        for t in tails {
            let (steps, closed) = self.walk_from(&ends, first, t);
            let starts_at_bd = matches!(t, End::Boundary(_));
            if !closed && !starts_at_bd {
                continue;
            }
            let names: Vec<&str> = steps.iter().map(|s| s.edge.as_str()).collect();
            if names == comp.edges.iter().map(|s| s.as_str()).collect::<Vec<_>>() {
                return Ok(steps);
            }
        }
        Err(format!("component {}: listed edges do not follow the strand", comp.name))
    }

    /// Steps of component `ci` in the direction of its orientation.
    pub fn oriented_steps(&self, ci: usize) -> std::result::Result<Vec<Step>, String> {
        let mut s = self.component_steps(ci)?;
        if self.components[ci].orient == Some(false) {
            s.reverse();
            for st in &mut s {
                std::mem::swap(&mut st.tail, &mut st.head);
            }
        }
        Ok(s)
    }

    /// For every edge on an oriented component, its `(tail, head)`.
    pub fn edge_directions(&self) -> HashMap<String, (Option<End>, Option<End>)> {
        let mut m = HashMap::new();
        for (ci, c) in self.components.iter().enumerate() {
            if c.orient.is_none() {
                continue;
            }
            if let Ok(steps) = self.oriented_steps(ci) {
                for s in steps {
                    m.insert(s.edge, (s.tail, s.head));
                }
            }
        }
        m
    }

    /// Incoming slots `(under, over)` of a classical crossing, if both strands are oriented.
    pub fn incoming_slots(&self, ci: usize, dirs: &HashMap<String, (Option<End>, Option<End>)>) -> Option<(usize, usize)> {
        let c = &self.crossings[ci];
        let into = |s: usize| dirs.get(&c.e[s]).map(|d| d.1 == Some(End::Slot(ci, s)));
        let iu = match (into(0)?, into(2)?) {
            (true, false) => 0,
            (false, true) => 2,
            _ => return None,
        };
        let io = match (into(1)?, into(3)?) {
            (true, false) => 1,
            (false, true) => 3,
            _ => return None,
        };
        Some((iu, io))
    }

    /// Sign of a classical crossing from the orientations: `+1`, `-1`, or `None`.
    pub fn crossing_sign(&self, ci: usize, dirs: &HashMap<String, (Option<End>, Option<End>)>) -> Option<i8> {
        if !self.crossings[ci].kind.is_classical() {
            return None;
        }
        let (iu, io) = self.incoming_slots(ci, dirs)?;
        Some(if io == (iu + 3) % 4 { 1 } else { -1 })
    }

    pub fn writhe(&self) -> Result<i64> {
        let dirs = self.edge_directions();
        let mut w = 0;
        for ci in 0..self.crossings.len() {
            if self.crossings[ci].kind.is_classical() {
                w += self.crossing_sign(ci, &dirs).ok_or_else(|| {
                    Error::Unsupported(format!("crossing {} is not oriented", self.crossings[ci].id))
                })? as i64;
            }
        }
        Ok(w)
    }

    /// Rewrite classical crossings so that slot 1 is the incoming under-strand and the
    /// kind records the sign; crossings with an unoriented strand become `u`.
    pub fn reorient(&mut self) {
        let dirs = self.edge_directions();
        for ci in 0..self.crossings.len() {
            if !self.crossings[ci].kind.is_classical() {
                continue;
            }
            match self.incoming_slots(ci, &dirs) {
                Some((iu, io)) => {
                    let positive = io == (iu + 3) % 4;
                    self.crossings[ci].e.rotate_left(iu);
                    self.crossings[ci].kind = if positive { CrossingKind::Positive } else { CrossingKind::Negative };
                }
                None => self.crossings[ci].kind = CrossingKind::Unoriented,
            }
        }
    }

    /// Set the orientation of every component (or clear it) and re-derive crossing kinds.
    pub fn set_orientations(&mut self, orient: &[Option<bool>]) {
        for (c, o) in self.components.iter_mut().zip(orient) {
            c.orient = *o;
        }
        self.reorient();
    }

    /// Reverse one component and re-derive crossing kinds.
    pub fn reverse_component(&mut self, ci: usize) {
        let c = &mut self.components[ci];
        c.orient = Some(!c.orient.unwrap_or(false));
        self.reorient();
    }

    /// Orient every component along its listed order.
    pub fn orient_all(&mut self) {
        let o = vec![Some(true); self.components.len()];
        self.set_orientations(&o);
    }

    /// Arcs: maximal strands that pass only over or virtual crossings. Each arc is
    /// returned as its sorted edge list; arcs are sorted by their first edge.
    pub fn arcs(&self) -> Vec<Vec<String>> {
        let mut idx: BTreeMap<&str, usize> = BTreeMap::new();
        for c in &self.components {
            for e in &c.edges {
                let k = idx.len();
                idx.entry(e.as_str()).or_insert(k);
            }
        }
        let names: Vec<&str> = {
            let mut v = vec![""; idx.len()];
            for (n, &i) in &idx {
                v[i] = n;
            }
            v
        };
        let mut uf = UnionFind::new(idx.len());
        for c in &self.crossings {
            let pairs: &[(usize, usize)] = if c.kind.is_classical() { &[(1, 3)] } else { &[(0, 2), (1, 3)] };
            for &(a, b) in pairs {
                uf.union(idx[c.e[a].as_str()], idx[c.e[b].as_str()]);
            }
        }
        let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for i in 0..names.len() {
            groups.entry(uf.find(i)).or_default().push(names[i].to_string());
        }
        let mut out: Vec<Vec<String>> = groups
            .into_values()
            .map(|mut v| {
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    /// Rename edges `e1, e2, …`, crossings `c1, c2, …` in order of first appearance.
    pub fn canonical_relabel(&self) -> Self {
        let mut map: HashMap<String, String> = HashMap::new();
        fn next(e: &str, map: &mut HashMap<String, String>) -> String {
            let k = map.len() + 1;
            map.entry(e.to_string()).or_insert_with(|| format!("e{k}")).clone()
        }
        let mut d = self.clone();
        for (i, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                d.crossings[i].e[s] = next(&c.e[s], &mut map);
            }
            d.crossings[i].id = format!("c{}", i + 1);
        }
        for (p, e) in self.boundary.iter().enumerate() {
            d.boundary[p] = next(e, &mut map);
        }
        for (i, c) in self.components.iter().enumerate() {
            for (j, e) in c.edges.iter().enumerate() {
                d.components[i].edges[j] = next(e, &mut map);
            }
        }
        d
    }

    /// Replace every occurrence of edge `from` by `to`.
    pub(crate) fn rename_edge(&mut self, from: &str, to: &str) {
        for c in &mut self.crossings {
            for e in &mut c.e {
                if e == from {
                    *e = to.to_string();
                }
            }
        }
        for e in &mut self.boundary {
            if e == from {
                *e = to.to_string();
            }
        }
        for c in &mut self.components {
            for e in &mut c.edges {
                if e == from {
                    *e = to.to_string();
                }
            }
        }
    }

    /// Merge edges pairwise (`from` into `to`), resolving names merged by earlier pairs
    /// so chains through kinks and boundary arcs stay joined. Returns the merges applied.
    pub(crate) fn merge_edges(&mut self, pairs: impl IntoIterator<Item = (String, String)>) -> Vec<(String, String)> {
        let mut alias: HashMap<String, String> = HashMap::new();
        let resolve = |alias: &HashMap<String, String>, mut e: String| {
            while let Some(n) = alias.get(&e) {
                e = n.clone();
            }
            e
        };
        let mut done = Vec::new();
        for (from, to) in pairs {
            let (from, to) = (resolve(&alias, from), resolve(&alias, to));
            if from != to {
                self.rename_edge(&from, &to);
                alias.insert(from.clone(), to.clone());
                done.push((from, to));
            }
        }
        done
    }

    /// All invariant violations; empty iff the diagram is well formed.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.boundary.len() != 2 * self.n {
            v.push(format!("{} boundary points for n={}", self.boundary.len(), self.n));
        }
        let mut ids = BTreeSet::new();
        for c in &self.crossings {
            if !ids.insert(c.id.as_str()) {
                v.push(format!("duplicate crossing id {}", c.id));
            }
        }
        let ends: BTreeMap<&str, Vec<End>> = self.ends().into_iter().collect();
        for (e, es) in &ends {
            if es.len() != 2 {
                v.push(format!("edge {e} used {} times", es.len()));
            }
        }
        let mut owner: HashMap<&str, &str> = HashMap::new();
        for c in &self.components {
            for e in &c.edges {
                if let Some(o) = owner.insert(e.as_str(), c.name.as_str()) {
                    v.push(format!("edge {e} listed in components {o} and {}", c.name));
                }
                if !ends.contains_key(e.as_str()) && c.edges.len() != 1 {
                    v.push(format!("edge {e} of component {} is not attached", c.name));
                }
            }
        }
        for e in ends.keys() {
            if !owner.contains_key(e) {
                v.push(format!("edge {e} belongs to no component"));
            }
        }
        if !v.is_empty() {
            return v;
        }
        for ci in 0..self.components.len() {
            if let Err(msg) = self.component_steps(ci) {
                v.push(msg);
            }
        }
        if !v.is_empty() {
            return v;
        }
        let dirs = self.edge_directions();
        for (ci, c) in self.crossings.iter().enumerate() {
            let want = match c.kind {
                CrossingKind::Positive => 1,
                CrossingKind::Negative => -1,
                _ => continue,
            };
            match self.incoming_slots(ci, &dirs) {
                None => v.push(format!("crossing {} has a sign but its strands are not oriented", c.id)),
                Some((iu, _)) if iu != 0 => {
                    v.push(format!("crossing {}: slot 1 is not the incoming under-strand", c.id))
                }
                Some(_) => {
                    if self.crossing_sign(ci, &dirs) != Some(want) {
                        v.push(format!("crossing {}: orientation contradicts sign {}", c.id, c.kind.symbol()));
                    }
                }
            }
        }
        v
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<usize> = None;
        let mut d = TangleDiagram { n: 0, crossings: Vec::new(), boundary: Vec::new(), components: Vec::new() };
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap();
            let toks: Vec<(usize, &str)> = tokens(line);
            let Some(&(col, head)) = toks.first() else {
                continue;
            };
            if header.is_none() {
                match head {
                    "link" => header = Some(0),
                    "tangle" => {
                        let (c, n) = toks.get(1).copied().ok_or_else(|| Error::parse(ln, col, "expected n=<int>"))?;
                        let n = n
                            .strip_prefix("n=")
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| Error::parse(ln, c, "expected n=<int>"))?;
                        header = Some(n);
                    }
                    _ => return Err(Error::parse(ln, col, "expected `tangle n=<int>` or `link` header")),
                }
                d.n = header.unwrap();
                continue;
            }
            match head {
                "x" => {
                    let (c, id) = toks.get(1).copied().ok_or_else(|| Error::parse(ln, col, "missing crossing id"))?;
                    if id.contains('=') {
                        return Err(Error::parse(ln, c, "missing crossing id"));
                    }
                    let mut kind = None;
                    let mut edges = None;
                    for &(c, t) in &toks[2..] {
                        if let Some(k) = t.strip_prefix("kind=") {
                            kind = Some(match k {
                                "+" => CrossingKind::Positive,
                                "-" => CrossingKind::Negative,
                                "u" => CrossingKind::Unoriented,
                                "v" => CrossingKind::Virtual,
                                _ => return Err(Error::parse(ln, c, format!("unknown crossing kind `{k}`"))),
                            });
                        } else if let Some(es) = t.strip_prefix("e=") {
                            let es: Vec<String> = es.split(',').map(str::to_string).collect();
                            if es.len() != 4 || es.iter().any(|e| !valid_id(e)) {
                                return Err(Error::parse(ln, c, "expected four edge ids"));
                            }
                            edges = Some([es[0].clone(), es[1].clone(), es[2].clone(), es[3].clone()]);
                        } else {
                            return Err(Error::parse(ln, c, format!("unexpected `{t}`")));
                        }
                    }
                    d.crossings.push(Crossing {
                        id: id.to_string(),
                        kind: kind.ok_or_else(|| Error::parse(ln, col, "missing kind="))?,
                        e: edges.ok_or_else(|| Error::parse(ln, col, "missing e="))?,
                    });
                }
                "boundary" => {
                    for &(c, t) in &toks[1..] {
                        if !valid_id(t) {
                            return Err(Error::parse(ln, c, format!("bad edge id `{t}`")));
                        }
                        d.boundary.push(t.to_string());
                    }
                }
                "component" => {
                    let (c, name) = toks.get(1).copied().ok_or_else(|| Error::parse(ln, col, "missing component name"))?;
                    if name.contains('=') {
                        return Err(Error::parse(ln, c, "missing component name"));
                    }
                    let mut comp = Component { name: name.to_string(), edges: Vec::new(), orient: None, color: None };
                    for &(c, t) in &toks[2..] {
                        if let Some(es) = t.strip_prefix("edges=") {
                            comp.edges = es.split(',').map(str::to_string).collect();
                            if comp.edges.iter().any(|e| !valid_id(e)) {
                                return Err(Error::parse(ln, c, "bad edge list"));
                            }
                        } else if let Some(o) = t.strip_prefix("orient=") {
                            comp.orient = Some(match o {
                                "+" => true,
                                "-" => false,
                                _ => return Err(Error::parse(ln, c, "orient must be + or -")),
                            });
                        } else if let Some(k) = t.strip_prefix("color=") {
                            comp.color =
                                Some(k.parse().ok().filter(|&k| k >= 1).ok_or_else(|| Error::parse(ln, c, "bad color"))?);
                        } else {
                            return Err(Error::parse(ln, c, format!("unexpected `{t}`")));
                        }
                    }
                    if comp.edges.is_empty() {
                        return Err(Error::parse(ln, col, "component without edges="));
                    }
                    d.components.push(comp);
                }
                _ => return Err(Error::parse(ln, col, format!("unknown directive `{head}`"))),
            }
        }
        if header.is_none() {
            return Err(Error::parse(1, 1, "empty diagram"));
        }
        Ok(d)
    }

    /// Parse and validate.
    pub fn load(text: &str) -> Result<Self> {
        let d = Self::parse(text)?;
        d.validate()?;
        Ok(d)
    }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn valid_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            writeln!(f, "link")?;
        } else {
            writeln!(f, "tangle n={}", self.n)?;
        }
        for c in &self.crossings {
            writeln!(f, "x {} kind={} e={}", c.id, c.kind.symbol(), c.e.join(","))?;
        }
        if !self.boundary.is_empty() {
            writeln!(f, "boundary {}", self.boundary.join(" "))?;
        }
        for c in &self.components {
            write!(f, "component {} edges={}", c.name, c.edges.join(","))?;
            if let Some(o) = c.orient {
                write!(f, " orient={}", if o { "+" } else { "-" })?;
            }
            if let Some(k) = c.color {
                write!(f, " color={k}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) struct UnionFind {
    p: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { p: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.p[a] != a {
            self.p[a] = self.p[self.p[a]];
            a = self.p[a];
        }
        a
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.p[a.max(b)] = a.min(b);
        }
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.p.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests;
