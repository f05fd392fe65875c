//! Kauffman bracket, Temperley–Lieb decomposition, Jones and HOMFLYPT polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::diagram::{all_matchings, catalan_matchings, CrossingKind, End, LinkDiagram, Matching, TangleDiagram, UnionFind};
use crate::error::{Error, Result};
use crate::ideal::IdealZA;
use crate::ring::{CyclotomicInt, LaurentPoly};

/// Laurent polynomial in the single variable `A`.
pub type BracketPoly = LaurentPoly;

/// Default bound on classical crossings for state sums and skein recursion.
pub const DEFAULT_CAP: usize = 24;

pub fn a_pow(k: i32) -> BracketPoly {
    LaurentPoly::from_univariate("A", [(k, 1)])
}

/// The loop value `δ = -A² - A⁻²`.
pub fn delta() -> BracketPoly {
    LaurentPoly::from_univariate("A", [(2, -1), (-2, -1)])
}

fn check_cap(d: &TangleDiagram, cap: usize) -> Result<()> {
    let c = d.crossings.iter().filter(|c| c.kind.is_classical()).count();
    if c > cap {
        return Err(Error::CapExceeded { what: "classical crossings", got: c, cap });
    }
    Ok(())
}

/// Partial smoothing: strand ends still waiting for their other half, paired up.
type Frontier = Vec<(u32, u32)>;

fn key(p: &HashMap<u32, u32>) -> Frontier {
    let mut v: Frontier = p.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
    v.sort_unstable();
    v
}

/// Join this crossing's ends of edges `x` and `y`; returns the number of loops closed.
fn join(p: &mut HashMap<u32, u32>, x: u32, y: u32) -> u32 {
    if x == y {
        return 1;
    }
    let ex = p.remove(&x);
    if ex == Some(y) {
        p.remove(&y);
        return 1;
    }
    let ey = p.remove(&y);
    let (tx, ty) = (ex.unwrap_or(x), ey.unwrap_or(y));
    p.insert(tx, ty);
    p.insert(ty, tx);
    0
}

/// Expansion of `d` in flat boundary matchings: every crossing smoothed (classical ones by
/// the bracket relation, virtual ones passed straight through), closed loops counted with `δ`
/// each. Keys are all matchings of the boundary, crossing ones included.
pub fn flat_decompose(d: &TangleDiagram, cap: usize) -> Result<BTreeMap<Matching, BracketPoly>> {
    check_cap(d, cap)?;
    let ends = d.ends();
    let mut names: Vec<&str> = ends.keys().copied().collect();
    names.sort_unstable();
    let idx: HashMap<&str, u32> = names.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
    let free = d
        .components
        .iter()
        .flat_map(|c| c.edges.iter())
        .filter(|e| !ends.contains_key(e.as_str()))
        .count();

    // Greedy order keeping the frontier small.
    let mut order = Vec::with_capacity(d.crossings.len());
    let mut done = vec![false; d.crossings.len()];
    let mut touched = vec![false; names.len()];
    for _ in 0..d.crossings.len() {
        let best = (0..d.crossings.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let open = d.crossings[i].e.iter().filter(|e| touched[idx[e.as_str()] as usize]).count();
                (open, std::cmp::Reverse(i))
            })
            .unwrap();
        done[best] = true;
        for e in &d.crossings[best].e {
            touched[idx[e.as_str()] as usize] = true;
        }
        order.push(best);
    }

    let (ap, am, dl) = (a_pow(1), a_pow(-1), delta());
    let mut states: HashMap<Frontier, BracketPoly> = HashMap::from([(Vec::new(), LaurentPoly::one())]);
    for ci in order {
        let c = &d.crossings[ci];
        let e = c.e.each_ref().map(|s| idx[s.as_str()]);
        let smoothings: Vec<([(usize, usize); 2], &BracketPoly)> = match c.kind {
            CrossingKind::Virtual => vec![([(0, 2), (1, 3)], &ap)],
            _ => vec![([(0, 1), (2, 3)], &ap), ([(0, 3), (1, 2)], &am)],
        };
        let mut next: HashMap<Frontier, BracketPoly> = HashMap::new();
        for (st, coef) in &states {
            for (pairs, w) in &smoothings {
                let mut p: HashMap<u32, u32> = st.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
                let loops: u32 = pairs.iter().map(|&(i, j)| join(&mut p, e[i], e[j])).sum();
                let mut t = if c.kind == CrossingKind::Virtual { coef.clone() } else { coef * *w };
                for _ in 0..loops {
                    t = &t * &dl;
                }
                let slot = next.entry(key(&p)).or_insert_with(LaurentPoly::zero);
                *slot += &t;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }

    let pos_of: HashMap<u32, Vec<usize>> = d.boundary.iter().enumerate().fold(HashMap::new(), |mut m, (p, e)| {
        m.entry(idx[e.as_str()]).or_default().push(p + 1);
        m
    });
    let mut out: BTreeMap<Matching, BracketPoly> = BTreeMap::new();
    let free_factor = dl.pow(free as u32);
    for (st, coef) in states {
        let mut pairs: Vec<(usize, usize)> = st.iter().map(|(a, b)| (pos_of[a][0], pos_of[b][0])).collect();
        pairs.extend(pos_of.values().filter(|v| v.len() == 2).map(|v| (v[0], v[1])));
        let m = Matching::new(pairs)?;
        let slot = out.entry(m).or_insert_with(LaurentPoly::zero);
        *slot += &(&coef * &free_factor);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Kauffman bracket of a closed diagram with `⟨unknot⟩ = 1`.
pub fn bracket(d: &LinkDiagram) -> Result<BracketPoly> {
    bracket_with_cap(d, DEFAULT_CAP)
}

pub fn bracket_with_cap(d: &LinkDiagram, cap: usize) -> Result<BracketPoly> {
    if !d.is_link() {
        return Err(Error::Unsupported("the bracket needs a closed diagram; close the tangle first".into()));
    }
    let flat = flat_decompose(d, cap)?;
    let total = flat.into_values().fold(LaurentPoly::zero(), |a, b| a + b);
    if total.is_zero() {
        return Ok(total);
    }
    total.div_exact(&delta()).ok_or_else(|| Error::Mismatch("state sum not divisible by the loop value".into()))
}

/// Bracket evaluated at `A = ζ`, a primitive eighth root of unity.
pub fn bracket_at_zeta(d: &LinkDiagram) -> Result<CyclotomicInt> {
    bracket(d)?.eval_all(CyclotomicInt::zeta())
}

/// Number of circles formed by two matchings on the same points.
pub fn loops(m1: &Matching, m2: &Matching) -> usize {
    let n2 = 2 * m1.n();
    let mut uf = UnionFind::new(n2);
    for &(a, b) in m1.pairs().iter().chain(m2.pairs()) {
        uf.union(a - 1, b - 1);
    }
    uf.classes()
}

/// Element of the Temperley–Lieb (bracket skein) module on `2n` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    pub n: usize,
    pub coeffs: BTreeMap<Matching, BracketPoly>,
}

impl TLElement {
    /// Bracket of the closure by `m`: `Σ c_k δ^(loops(k, m) - 1)`.
    pub fn close(&self, m: &Matching) -> BracketPoly {
        let dl = delta();
        self.coeffs.iter().fold(LaurentPoly::zero(), |acc, (k, c)| acc + c * &dl.pow(loops(k, m) as u32 - 1))
    }

    pub fn coeff(&self, m: &Matching) -> BracketPoly {
        self.coeffs.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{m}]  {c}")?;
        }
        Ok(())
    }
}

/// Decompose a classical tangle in the basis of Catalan tangles.
pub fn tl_decompose(t: &TangleDiagram, cap: usize) -> Result<TLElement> {
    if t.virtual_count() > 0 {
        return Err(Error::Unsupported("Temperley–Lieb decomposition needs a classical tangle".into()));
    }
    Ok(TLElement { n: t.n, coeffs: flat_decompose(t, cap)? })
}

fn require_oriented_classical(d: &LinkDiagram) -> Result<()> {
    if !d.is_link() {
        return Err(Error::Unsupported("a closed diagram is required".into()));
    }
    if d.virtual_count() > 0 {
        return Err(Error::Unsupported("virtual crossings are not supported here".into()));
    }
    if d.components.iter().any(|c| c.orient.is_none()) {
        return Err(Error::Unsupported("every component must be oriented".into()));
    }
    Ok(())
}

/// Jones polynomial as a Laurent polynomial in `s = t^(1/4)`; see [`format_quarter`].
pub fn jones(d: &LinkDiagram) -> Result<LaurentPoly> {
    jones_with_cap(d, DEFAULT_CAP)
}

pub fn jones_with_cap(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    require_oriented_classical(d)?;
    let w = d.writhe()? as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = bracket_with_cap(d, cap)?.scale(sign).mul_monomial(&crate::ring::Monomial::new([("A", -3 * w)]));
    f.substitute("A", &LaurentPoly::from_univariate("s", [(-1, 1)]))
}

/// Print a polynomial in `s = t^(1/4)` with fractional powers of `t`.
pub fn format_quarter(p: &LaurentPoly, s: &str, t: &str) -> String {
    let Some(u) = p.to_univariate(s) else { return p.to_string() };
    if u.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (&k, &c)) in u.iter().rev().enumerate() {
        let g = num_integer::Integer::gcd(&k, &4).max(1);
        let (num, den) = (k / g, 4 / g);
        let pw = match (num, den) {
            (0, _) => String::new(),
            (1, 1) => t.to_string(),
            (n, 1) => format!("{t}^{n}"),
            (n, d) => format!("{t}^({n}/{d})"),
        };
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        match (a, pw.is_empty()) {
            (_, true) => out.push_str(&a.to_string()),
            (1, false) => out.push_str(&pw),
            _ => out.push_str(&format!("{a}*{pw}")),
        }
    }
    out
}

/// HOMFLYPT polynomial in `v, z` with `v⁻¹P₊ - vP₋ = zP₀` and `P(unknot) = 1`.
pub fn homflypt(d: &LinkDiagram) -> Result<LaurentPoly> {
    homflypt_with_cap(d, DEFAULT_CAP)
}

pub fn homflypt_with_cap(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    require_oriented_classical(d)?;
    check_cap(d, cap)?;
    let mut memo = HashMap::new();
    Ok(homfly_rec(d, &mut memo))
}

fn unlink(mu: usize) -> LaurentPoly {
    if mu == 0 {
        return LaurentPoly::one();
    }
    let k = (mu - 1) as u32;
    let num = LaurentPoly::from_univariate("v", [(-1, 1), (1, -1)]).pow(k);
    num.mul_monomial(&crate::ring::Monomial::new([("z", -(k as i32))]))
}

/// First crossing met from below when walking the components in order from their listed
/// base edges; `None` for a descending diagram.
fn first_ascending(d: &LinkDiagram) -> Option<usize> {
    let mut seen = vec![false; d.crossings.len()];
    for ci in 0..d.components.len() {
        let steps = d.oriented_steps(ci).ok()?;
        for s in steps {
            if let Some(End::Slot(c, slot)) = s.head {
                if !seen[c] {
                    seen[c] = true;
                    if slot % 2 == 0 {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

fn homfly_rec(d: &LinkDiagram, memo: &mut HashMap<String, LaurentPoly>) -> LaurentPoly {
    let key = d.canonical_relabel().to_string();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let p = match first_ascending(d) {
        None => unlink(d.components.len()),
        Some(c) => {
            let positive = d.crossings[c].kind == CrossingKind::Positive;
            let switched = d.switch_crossing(c);
            let smoothed = d.smooth_oriented(c);
            let (ps, p0) = (homfly_rec(&switched, memo), homfly_rec(&smoothed, memo));
            let v = |k: i32| LaurentPoly::from_univariate("v", [(k, 1)]);
            let z = LaurentPoly::var("z");
            if positive {
                &v(2) * &ps + &(&v(1) * &z) * &p0
            } else {
                &v(-2) * &ps - &(&v(-1) * &z) * &p0
            }
        }
    };
    memo.insert(key, p.clone());
    p
}

/// Alexander–Conway polynomial `∇(z)`, the HOMFLYPT polynomial at `v = 1`.
pub fn conway(d: &LinkDiagram) -> Result<LaurentPoly> {
    conway_with_cap(d, DEFAULT_CAP)
}

pub fn conway_with_cap(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    homflypt_with_cap(d, cap)?.substitute("v", &LaurentPoly::one())
}

/// Jones polynomial through HOMFLYPT at `v = t`, `z = t^(1/2) - t^(-1/2)`, in `s = t^(1/4)`.
pub fn jones_from_homflypt(d: &LinkDiagram) -> Result<LaurentPoly> {
    let p = homflypt(d)?;
    // Clear the z denominators first; z itself does not become a unit.
    let k = p.degree_range("z").map_or(0, |(lo, _)| (-lo).max(0));
    let p = p.mul_monomial(&crate::ring::Monomial::new([("z", k)]));
    let zs = LaurentPoly::from_univariate("s", [(2, 1), (-2, -1)]);
    let p = p.substitute("v", &LaurentPoly::from_univariate("s", [(4, 1)]))?.substitute("z", &zs)?;
    p.div_exact(&zs.pow(k as u32)).ok_or_else(|| Error::Mismatch("HOMFLYPT does not specialize to a Laurent polynomial".into()))
}

/// Brackets of the closures of `t` by each of `matchings`, from one flat expansion.
pub fn closure_brackets(t: &TangleDiagram, matchings: &[Matching], cap: usize) -> Result<Vec<BracketPoly>> {
    if t.is_link() {
        return Err(Error::Unsupported("closures need a tangle".into()));
    }
    let flat = TLElement { n: t.n, coeffs: flat_decompose(t, cap)? };
    Ok(matchings.iter().map(|m| flat.close(m)).collect())
}

/// The ideal generated by the brackets of all Catalan closures of `t`.
pub fn bracket_ideal(t: &TangleDiagram) -> Result<IdealZA> {
    bracket_ideal_with_cap(t, DEFAULT_CAP)
}

pub fn bracket_ideal_with_cap(t: &TangleDiagram, cap: usize) -> Result<IdealZA> {
    IdealZA::new(&closure_brackets(t, &catalan_matchings(t.n), cap)?)
}

/// The ideal generated by the brackets of all closures of `t`, crossing matchings included.
pub fn virtual_bracket_ideal(t: &TangleDiagram) -> Result<IdealZA> {
    virtual_bracket_ideal_with_cap(t, DEFAULT_CAP)
}

pub fn virtual_bracket_ideal_with_cap(t: &TangleDiagram, cap: usize) -> Result<IdealZA> {
    IdealZA::new(&closure_brackets(t, &all_matchings(t.n), cap)?)
}
