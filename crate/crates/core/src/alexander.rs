//! Alexander–Fox modules of tangles and links: presentations, the torsion invariant τ,
//! the boundary invariant β, Alexander polynomials, determinants and the embedding
//! obstructions built from them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::diagram::{denominator, numerator, CrossingKind, LinkDiagram, TangleDiagram};
use crate::error::{Error, Result};
use crate::linalg::{
    self,
    first_nonzero_elementary_divisor, minor_gcd, rank_over_fractions, smith_normal_form, to_integer_matrix,
    to_rational_laurent, Euclidean, QLaurent, RingMatrix, DEFAULT_MINOR_CAP,
};
use crate::ring::{int_gcd, Coeff, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelingMode {
    /// One variable per component color.
    Colored,
    /// A single variable `x`.
    Oriented,
    /// `x = -1`; integer coefficients, no orientation needed.
    Unoriented,
}

impl std::str::FromStr for LabelingMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "colored" => Ok(Self::Colored),
            "oriented" => Ok(Self::Oriented),
            "unoriented" => Ok(Self::Unoriented),
            _ => Err(Error::parse(1, 1, format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for LabelingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Colored => "colored",
            Self::Oriented => "oriented",
            Self::Unoriented => "unoriented",
        })
    }
}

/// Variable attached to color `k`: `x, y, z, w`, then `x5, x6, …`.
pub fn color_var(k: u32) -> String {
    match k {
        1 => "x".into(),
        2 => "y".into(),
        3 => "z".into(),
        4 => "w".into(),
        _ => format!("x{k}"),
    }
}

fn color_of_var(v: &str) -> Option<u32> {
    match v {
        "x" => Some(1),
        "y" => Some(2),
        "z" => Some(3),
        "w" => Some(4),
        _ => v.strip_prefix('x')?.parse().ok().filter(|&k| k > 4),
    }
}

/// Module over a Laurent ring: generators, one relation per row, and the generators
/// that meet the boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation {
    pub generators: Vec<String>,
    pub relations: RingMatrix,
    pub boundary: Vec<usize>,
    /// Variable of each generator's strand (`None` in unoriented mode).
    pub var_of: Vec<Option<String>>,
}

impl ModulePresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// The same module with every variable set to `x` (oriented) or to `-1` (unoriented).
    pub fn specialize(&self, mode: LabelingMode) -> Result<Self> {
        let f = |c: &LaurentPoly| -> Result<LaurentPoly> {
            match mode {
                LabelingMode::Colored => Ok(c.clone()),
                LabelingMode::Oriented => c.vars().iter().filter(|v| *v != "x").try_fold(c.clone(), |acc, v| acc.substitute(v, &LaurentPoly::var("x"))),
                LabelingMode::Unoriented => Ok(LaurentPoly::constant(c.eval_all::<Coeff>(-1)?)),
            }
        };
        let var_of = match mode {
            LabelingMode::Colored => self.var_of.clone(),
            LabelingMode::Oriented => vec![Some("x".to_string()); self.generators.len()],
            LabelingMode::Unoriented => vec![None; self.generators.len()],
        };
        Ok(ModulePresentation { relations: self.relations.try_map(f)?, var_of, ..self.clone() })
    }

    /// Parse the text form:
    ///
    /// ```text
    /// gens a b c
    /// rel b + y*a = c + x*b
    /// boundary a c
    /// components a:1 b:2 c:1
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Vec<String> = Vec::new();
        let mut rels: Vec<(usize, String)> = Vec::new();
        let mut boundary: Vec<(usize, String)> = Vec::new();
        let mut comps: Vec<(usize, String, u32)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match head {
                "gens" => gens.extend(rest.split_whitespace().map(str::to_string)),
                "rel" => rels.push((ln, rest.to_string())),
                "boundary" => boundary.extend(rest.split_whitespace().map(|g| (ln, g.to_string()))),
                "components" => {
                    for t in rest.split_whitespace() {
                        let (g, k) = t.split_once(':').ok_or_else(|| Error::parse(ln, 1, format!("expected gen:color, got `{t}`")))?;
                        let k = k.parse().map_err(|_| Error::parse(ln, 1, format!("bad color `{k}`")))?;
                        comps.push((ln, g.to_string(), k));
                    }
                }
                _ => return Err(Error::parse(ln, 1, format!("unknown directive `{head}`"))),
            }
        }
        if gens.is_empty() {
            return Err(Error::parse(1, 1, "missing `gens` line"));
        }
        let index: HashMap<&str, usize> = gens.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let lookup = |ln: usize, g: &str| index.get(g).copied().ok_or_else(|| Error::parse(ln, 1, format!("unknown generator `{g}`")));
        let mut m = RingMatrix::with_cols(gens.len());
        for (ln, r) in &rels {
            let (lhs, rhs) = r.split_once('=').ok_or_else(|| Error::parse(*ln, 1, "relation needs `=`"))?;
            let mut row = vec![LaurentPoly::zero(); gens.len()];
            for (side, sign) in [(lhs, 1), (rhs, -1)] {
                for (coef, g) in split_terms(side, *ln)? {
                    let j = lookup(*ln, &g)?;
                    row[j] = &row[j] + &coef.scale(sign);
                }
            }
            m.push_row(row);
        }
        let boundary = boundary.iter().map(|(ln, g)| lookup(*ln, g)).collect::<Result<Vec<_>>>()?;
        let mut var_of = vec![None; gens.len()];
        for (ln, g, k) in &comps {
            var_of[lookup(*ln, g)?] = Some(color_var(*k));
        }
        Ok(ModulePresentation { generators: gens, relations: m, boundary, var_of })
    }
}

/// Split `p*g + q*h - g2` into `(coefficient, generator)` pairs.
fn split_terms(side: &str, ln: usize) -> Result<Vec<(LaurentPoly, String)>> {
    let mut terms = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    let bytes = side.as_bytes();
    let mut pieces = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start && !side[start..i].trim().is_empty() && !side[..i].trim_end().ends_with('^') => {
                pieces.push(&side[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    pieces.push(&side[start..]);
    for p in pieces {
        let p = p.trim();
        if p.is_empty() || p == "0" {
            continue;
        }
        let (sign, body) = match p.strip_prefix('-') {
            Some(b) => (-1, b.trim()),
            None => (1, p.strip_prefix('+').unwrap_or(p).trim()),
        };
        let (coef, gen) = match body.rfind('*') {
            Some(i) if body[..i].matches('(').count() == body[..i].matches(')').count() => {
                (LaurentPoly::parse_at(body[..i].trim(), ln)?, body[i + 1..].trim().to_string())
            }
            _ => (LaurentPoly::one(), body.to_string()),
        };
        if gen.is_empty() || !gen.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.') {
            return Err(Error::parse(ln, 1, format!("bad term `{p}`")));
        }
        terms.push((coef.scale(sign), gen));
    }
    Ok(terms)
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generators.join(" "))?;
        for i in 0..self.relations.rows() {
            let terms: Vec<String> = self
                .relations
                .row(i)
                .iter()
                .zip(&self.generators)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, g)| format!("({c})*{g}"))
                .collect();
            writeln!(f, "rel {} = 0", if terms.is_empty() { "0".into() } else { terms.join(" + ") })?;
        }
        let b: Vec<&str> = self.boundary.iter().map(|&i| self.generators[i].as_str()).collect();
        writeln!(f, "boundary {}", b.join(" "))?;
        let comps: Vec<String> = self
            .generators
            .iter()
            .zip(&self.var_of)
            .filter_map(|(g, v)| Some(format!("{g}:{}", color_of_var(v.as_deref()?)?)))
            .collect();
        if !comps.is_empty() {
            writeln!(f, "components {}", comps.join(" "))?;
        }
        Ok(())
    }
}

fn check_mode(d: &TangleDiagram, mode: LabelingMode) -> Result<()> {
    let need_orient = mode != LabelingMode::Unoriented;
    if need_orient && !d.is_oriented() {
        return Err(Error::Unsupported(format!("{mode} mode needs every component oriented")));
    }
    if mode == LabelingMode::Colored && !d.is_colored() {
        return Err(Error::Unsupported("colored mode needs every component colored".into()));
    }
    Ok(())
}

/// Alexander–Fox presentation: a generator per arc, a relation per classical crossing.
/// Virtual crossings do not split arcs.
pub fn fox_presentation(d: &TangleDiagram, mode: LabelingMode) -> Result<ModulePresentation> {
    d.validate()?;
    check_mode(d, mode)?;
    let mut d = d.clone();
    if mode != LabelingMode::Unoriented {
        d.reorient();
    }
    let arcs = d.arcs();
    let arc_of: HashMap<&str, usize> = arcs.iter().enumerate().flat_map(|(i, a)| a.iter().map(move |e| (e.as_str(), i))).collect();
    let comp_of = d.component_of_edge();
    let var_of: Vec<Option<String>> = arcs
        .iter()
        .map(|a| match mode {
            LabelingMode::Unoriented => None,
            LabelingMode::Oriented => Some("x".to_string()),
            LabelingMode::Colored => d.components[comp_of[a[0].as_str()]].color.map(color_var),
        })
        .collect();
    let q = arcs.len();
    let mut m = RingMatrix::with_cols(q);
    for c in d.crossings.iter().filter(|c| c.kind.is_classical()) {
        let (a_in, a_out, over) = (arc_of[c.e[0].as_str()], arc_of[c.e[2].as_str()], arc_of[c.e[1].as_str()]);
        let mut row = vec![LaurentPoly::zero(); q];
        let mut put = |j: usize, v: LaurentPoly| row[j] = &row[j] + &v;
        match mode {
            LabelingMode::Unoriented => {
                put(a_in, LaurentPoly::constant(-1));
                put(a_out, LaurentPoly::constant(-1));
                put(over, LaurentPoly::constant(2));
            }
            _ => {
                // Fox derivative of the Wirtinger relation: the incoming arc is weighted by
                // the over strand's variable and the over arc by 1 - (under variable).
                let xo = LaurentPoly::var(var_of[over].as_deref().unwrap());
                let xu = LaurentPoly::var(var_of[a_in].as_deref().unwrap());
                let (src, dst) = match c.kind {
                    CrossingKind::Positive => (a_in, a_out),
                    CrossingKind::Negative => (a_out, a_in),
                    _ => return Err(Error::Unsupported(format!("crossing {} is not oriented", c.id))),
                };
                put(src, xo);
                put(over, &LaurentPoly::one() - &xu);
                put(dst, LaurentPoly::constant(-1));
            }
        }
        m.push_row(row);
    }
    let mut boundary: Vec<usize> = d.boundary.iter().map(|e| arc_of[e.as_str()]).collect();
    boundary.sort_unstable();
    boundary.dedup();
    Ok(ModulePresentation { generators: arcs.iter().map(|a| a[0].clone()).collect(), relations: m, boundary, var_of })
}

/// Canonical torsion invariant: the first nonzero elementary divisor.
pub fn tau_of(p: &ModulePresentation) -> Result<LaurentPoly> {
    let (_, t) = first_nonzero_elementary_divisor(&p.relations, DEFAULT_MINOR_CAP)?;
    Ok(t.normalize())
}

pub fn tau(t: &TangleDiagram, mode: LabelingMode) -> Result<LaurentPoly> {
    tau_of(&fox_presentation(t, mode)?)
}

/// Value of β, or a record that the multivariate heuristic could not decide it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Beta {
    Value(LaurentPoly),
    Indeterminate,
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Beta::Value(p) => write!(f, "{p}"),
            Beta::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

impl Beta {
    pub fn value(&self) -> Option<&LaurentPoly> {
        match self {
            Beta::Value(p) => Some(p),
            Beta::Indeterminate => None,
        }
    }
}

/// Whether some variable class has no generator on the boundary, which puts β in the
/// rank-one branch (`Δ₁` instead of `Δ₀`).
fn closed_class(p: &ModulePresentation) -> bool {
    let mut classes: BTreeMap<Option<&str>, bool> = BTreeMap::new();
    for (i, v) in p.var_of.iter().enumerate() {
        *classes.entry(v.as_deref()).or_default() |= p.boundary.contains(&i);
    }
    classes.values().any(|&touches| !touches)
}

/// `Δ_j` of `R^k / rowspan(b)` from the Smith form of `b`.
fn coker_divisor<T: Euclidean>(b: &RingMatrix<T>, k: usize, j: usize) -> T {
    if j >= k {
        return T::one();
    }
    let need = k - j;
    if b.rows() == 0 {
        return T::zero();
    }
    let snf = smith_normal_form(b);
    if snf.rank() < need {
        return T::zero();
    }
    snf.diagonal.iter().take(need).fold(T::one(), |acc, d| acc.mul(d))
}

/// β over a principal ideal domain: quotient by torsion via Smith form, then by the
/// images of the boundary generators.
fn beta_pid<T: Euclidean>(m: &RingMatrix<T>, boundary: &[usize], j: usize) -> T {
    let q = m.cols();
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let free: Vec<usize> = (r..q).collect();
    // Generator e_b has coordinates e_b·V in the Smith basis.
    let rows: Vec<Vec<T>> = boundary.iter().map(|&b| free.iter().map(|&c| snf.v.get(b, c).clone()).collect()).collect();
    let b = if rows.is_empty() { RingMatrix::<T>::zeros(0, free.len()) } else { RingMatrix::from_rows(rows).unwrap() };
    coker_divisor(&b, free.len(), j)
}

pub fn beta_of(p: &ModulePresentation, mode: LabelingMode) -> Result<Beta> {
    let j = usize::from(closed_class(p));
    match mode {
        LabelingMode::Unoriented => {
            let m = to_integer_matrix(&p.relations)?;
            let v: Coeff = beta_pid(&m, &p.boundary, j);
            Ok(Beta::Value(LaurentPoly::constant(v.abs())))
        }
        LabelingMode::Oriented => {
            let m = to_rational_laurent(&p.relations, "x")?;
            let v: QLaurent = beta_pid(&m, &p.boundary, j);
            Ok(Beta::Value(v.primitive("x")))
        }
        LabelingMode::Colored => beta_unit_pivot(p, j),
    }
}

pub fn beta(t: &TangleDiagram, mode: LabelingMode) -> Result<Beta> {
    beta_of(&fox_presentation(t, mode)?, mode)
}

/// Multivariate β: repeatedly eliminate generators through unit entries and replace rows
/// by primitive parts (dividing out a factor only adds torsion relations, which β
/// ignores). When no relations remain the module is free and β is read off the boundary
/// vectors; otherwise the result is `Indeterminate`.
fn beta_unit_pivot(p: &ModulePresentation, j: usize) -> Result<Beta> {
    let mut rows: Vec<Vec<LaurentPoly>> = (0..p.relations.rows()).map(|i| p.relations.row(i).to_vec()).collect();
    let q = p.generator_count();
    let mut bvec: Vec<Vec<LaurentPoly>> = p
        .boundary
        .iter()
        .map(|&b| (0..q).map(|c| if c == b { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; q];
    loop {
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        if rows.is_empty() {
            break;
        }
        let pivot = rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|x| x.is_unit()).map(|c| (i, c)));
        let Some((pi, pc)) = pivot else {
            let mut changed = false;
            for r in &mut rows {
                let g = r.iter().fold(LaurentPoly::zero(), |acc, x| acc.gcd(x));
                if !g.is_unit() && !g.is_zero() {
                    for x in r.iter_mut() {
                        *x = x.div_exact(&g).expect("gcd divides");
                    }
                    changed = true;
                }
            }
            if !changed {
                return Ok(Beta::Indeterminate);
            }
            continue;
        };
        let prow = rows.remove(pi);
        let u = prow[pc].clone();
        let eliminate = |v: &mut Vec<LaurentPoly>| {
            if v[pc].is_zero() {
                return;
            }
            let f = v[pc].div_exact(&u).expect("unit divides");
            for (x, y) in v.iter_mut().zip(&prow) {
                *x = &*x - &(&f * y);
            }
        };
        for r in rows.iter_mut() {
            eliminate(r);
        }
        for b in bvec.iter_mut() {
            eliminate(b);
        }
        alive[pc] = false;
    }
    let free: Vec<usize> = (0..q).filter(|&c| alive[c]).collect();
    let k = free.len();
    if j >= k {
        return Ok(Beta::Value(LaurentPoly::one()));
    }
    let brows: Vec<Vec<LaurentPoly>> = bvec.iter().map(|b| free.iter().map(|&c| b[c].clone()).collect()).collect();
    if brows.is_empty() {
        return Ok(Beta::Value(LaurentPoly::zero()));
    }
    let b = RingMatrix::from_rows(brows)?;
    Ok(Beta::Value(minor_gcd(&b, k - j, DEFAULT_MINOR_CAP)?.normalize()))
}

/// Alexander polynomial of a closed diagram, canonical: the gcd of the first minors of
/// the presentation. With at most one variable and a classical diagram all first minors
/// agree up to units, so the one deleting the first relation and first arc is used. With
/// several colors a minor deleting an arc of color `j` carries an extra factor `x_j - 1`,
/// and virtual diagrams have genuinely different minors; both take the gcd.
pub fn alexander_polynomial(d: &LinkDiagram, mode: LabelingMode) -> Result<LaurentPoly> {
    if !d.is_link() {
        return Err(Error::Unsupported("the Alexander polynomial needs a closed diagram".into()));
    }
    if d.components.is_empty() {
        return Err(Error::Unsupported("empty diagram".into()));
    }
    let p = fox_presentation(d, mode)?;
    let q = p.generator_count();
    let vars: std::collections::BTreeSet<&str> = p.var_of.iter().flatten().map(String::as_str).collect();
    if !d.is_classical() || vars.len() > 1 || p.relations.rows() > q {
        return Ok(minor_gcd(&p.relations, q - 1, DEFAULT_MINOR_CAP)?.normalize());
    }
    let mut m = p.relations.clone();
    while m.rows() < q {
        m.push_row(vec![LaurentPoly::zero(); q]);
    }
    let rest: Vec<usize> = (1..q).collect();
    let a = if q == 1 { LaurentPoly::one() } else { linalg::determinant(&m.select(&rest, &rest))?.normalize() };
    debug_assert_eq!(a, minor_gcd(&m, q - 1, DEFAULT_MINOR_CAP)?.normalize(), "first minors of a classical diagram disagree");
    Ok(a)
}

/// `|Δ(-1)|`, taken as the gcd of codimension-one minors of the unoriented presentation.
pub fn determinant(d: &LinkDiagram) -> Result<Coeff> {
    let a = alexander_polynomial(d, LabelingMode::Unoriented)?;
    Ok(a.constant_value().unwrap_or(0).abs())
}

/// `gcd(det n(t), det d(t))` for a 4-tangle.
pub fn krebes_gcd(t: &TangleDiagram) -> Result<Coeff> {
    if t.n != 2 {
        return Err(Error::Unsupported(format!("a 4-tangle is required, got n={}", t.n)));
    }
    Ok(int_gcd(determinant(&numerator(t))?, determinant(&denominator(t))?))
}

/// Largest square-free divisor of `n`.
pub fn squarefree_part(n: Coeff) -> Coeff {
    let mut n = n.abs();
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    out * n.max(1)
}

/// `a | b` up to units in the Laurent ring; zero is divisible by everything except zero.
pub fn divides_up_to_units(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    if b.is_zero() {
        return true;
    }
    b.normalize().div_exact(&a.normalize()).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestLine {
    pub name: String,
    pub detail: String,
    pub obstructed: bool,
}

fn colors(d: &TangleDiagram) -> BTreeSet<u32> {
    d.components.iter().filter_map(|c| c.color).collect()
}

/// Whether the tangle's strand colors can be those of link components: colored
/// invariants only compare when every color of `t` also colors a component of `l`.
pub fn colors_compatible(t: &TangleDiagram, l: &LinkDiagram) -> bool {
    colors(t).is_subset(&colors(l))
}

/// Outcome of [`check_embedding_obstruction`]: one line per applicable test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub lines: Vec<TestLine>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn obstructed(&self) -> bool {
        self.lines.iter().any(|l| l.obstructed)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{}: {} -> {}", l.name, l.detail, if l.obstructed { "OBSTRUCTED" } else { "passes" })?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "verdict: {}", if self.obstructed() { "OBSTRUCTED" } else { "no obstruction found" })
    }
}

/// Run every test that applies to the tangle `t` and the link `l` in `mode`.
pub fn check_embedding_obstruction(t: &TangleDiagram, l: &LinkDiagram, mode: LabelingMode) -> Result<Verdict> {
    if t.is_link() || !l.is_link() {
        return Err(Error::Unsupported("check needs a tangle and a closed link".into()));
    }
    if mode == LabelingMode::Colored && !colors_compatible(t, l) {
        return Err(Error::Unsupported(format!(
            "colored mode needs every tangle color to occur in the link (tangle {:?}, link {:?})",
            colors(t),
            colors(l)
        )));
    }
    let classical = t.is_classical() && l.is_classical();
    let mut v = Verdict { lines: Vec::new(), notes: Vec::new() };
    if t.n == 2 {
        let g = krebes_gcd(t)?;
        let det = determinant(l)?;
        if classical {
            v.lines.push(TestLine {
                name: "determinant gcd".into(),
                detail: format!("gcd(det n(t), det d(t)) = {g} divides det = {det}?"),
                obstructed: !divides_int(g, det),
            });
        } else {
            let s = squarefree_part(g);
            v.lines.push(TestLine {
                name: "virtual determinant".into(),
                detail: format!("square-free part {s} of {g} divides det = {det}?"),
                obstructed: !divides_int(s, det),
            });
            if !divides_int(g, det) && divides_int(s, det) {
                v.notes.push(format!("{g} does not divide {det}; only the square-free part is a valid obstruction for virtual links"));
            }
        }
    } else {
        v.notes.push("determinant tests need a 4-tangle".into());
    }
    if mode != LabelingMode::Unoriented {
        if !classical {
            v.notes.push("τβ divisibility is only tested for classical diagrams".into());
            return Ok(v);
        }
        let tau = tau(t, mode)?;
        let beta = beta(t, mode)?;
        let delta = alexander_polynomial(l, mode)?;
        let (prod, label) = match &beta {
            Beta::Value(b) => (&tau * b, "τβ"),
            Beta::Indeterminate => {
                v.notes.push("β is indeterminate; testing τ alone".into());
                (tau.clone(), "τ")
            }
        };
        v.lines.push(TestLine {
            name: format!("{mode} Alexander"),
            detail: format!("{label} = {} divides Δ = {delta}?", prod.normalize()),
            obstructed: !divides_up_to_units(&prod, &delta),
        });
    }
    Ok(v)
}

fn divides_int(a: Coeff, b: Coeff) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

/// Rank of the module's relation matrix over its fraction field.
pub fn relation_rank(p: &ModulePresentation) -> usize {
    rank_over_fractions(&p.relations)
}

#[cfg(test)]
mod tests;
