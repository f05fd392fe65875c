//! Ideals of `Z[A^±1]`, represented by canonical strong Gröbner bases of their
//! contraction to `Z[A]`, and their images in `Z[ζ]`, ζ a primitive eighth root of unity.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::ring::{Coeff, CyclotomicInt, EvalRing, LaurentPoly};

/// Dense coefficients, lowest degree first, no trailing zeros. Intermediate Gröbner
/// coefficients outgrow `i128`, so the computation runs on big integers.
type Poly = Vec<BigInt>;

/// How often the bounded `A^m` fallback in [`IdealZA::contains`] changed an answer.
pub static FALLBACK_HITS: AtomicUsize = AtomicUsize::new(0);

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn deg(p: &Poly) -> usize {
    p.len() - 1
}

fn lc(p: &Poly) -> &BigInt {
    p.last().unwrap()
}

/// `f += c·A^shift·g`.
fn add_scaled(f: &mut Poly, c: &BigInt, shift: usize, g: &Poly) {
    if f.len() < g.len() + shift {
        f.resize(g.len() + shift, BigInt::zero());
    }
    for (i, x) in g.iter().enumerate() {
        f[i + shift] += c * x;
    }
}

fn positive(p: Poly) -> Poly {
    if p.last().is_some_and(Signed::is_negative) {
        p.into_iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// `(g, u, v)` with `u·a + v·b = g = gcd(a, b) ≥ 0`.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn ext_gcd_int(a: Coeff, b: Coeff) -> (Coeff, Coeff, Coeff) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Remainder of `c` modulo `m > 0` in `(-m/2, m/2]`.
fn sym_rem(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &(&r * 2) > m {
        r - m
    } else {
        r
    }
}

/// Full reduction by `g`: every coefficient is reduced, from the top, modulo the
/// smallest leading coefficient among elements of no larger degree.
fn reduce(f: &Poly, g: &[Poly]) -> Poly {
    let mut f = trim(f.clone());
    let mut k = f.len();
    while k > 0 {
        k -= 1;
        if k >= f.len() || f[k].is_zero() {
            continue;
        }
        let best = g.iter().filter(|h| deg(h) <= k).min_by(|a, b| {
            lc(a).abs().cmp(&lc(b).abs()).then(deg(b).cmp(&deg(a)))
        });
        if let Some(h) = best {
            let r = sym_rem(&f[k], &lc(h).abs());
            let q = (&f[k] - r) / lc(h);
            if !q.is_zero() {
                add_scaled(&mut f, &-q, k - deg(h), h);
            }
        }
        f = trim(f);
    }
    f
}

fn strong_basis(gens: Vec<Poly>) -> Vec<Poly> {
    let mut g: Vec<Poly> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by_key(|p| p.len());
    for p in sorted {
        let r = reduce(&p, &g);
        if !r.is_empty() {
            g.push(positive(r));
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    loop {
        // Lowest-degree pair first keeps the coefficients small.
        let Some(at) = (0..pairs.len()).min_by_key(|&k| g[pairs[k].0].len().max(g[pairs[k].1].len())) else {
            break;
        };
        let (i, j) = pairs.swap_remove(at);
        let (a, b) = if deg(&g[i]) <= deg(&g[j]) { (&g[i], &g[j]) } else { (&g[j], &g[i]) };
        let shift = deg(b) - deg(a);
        let (ca, cb) = (lc(a), lc(b));
        let l = ca.lcm(cb);
        let mut s = Vec::new();
        add_scaled(&mut s, &(&l / cb), 0, b);
        add_scaled(&mut s, &-(&l / ca), shift, a);
        let (_, u, v) = ext_gcd(ca, cb);
        let mut gp = Vec::new();
        add_scaled(&mut gp, &u, shift, a);
        add_scaled(&mut gp, &v, 0, b);
        for p in [s, gp] {
            let r = reduce(&p, &g);
            if !r.is_empty() {
                let k = g.len();
                g.push(positive(r));
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
    }
    minimal(&g)
}

/// One element per degree at which the leading-coefficient ideal shrinks, then
/// inter-reduced.
fn minimal(g: &[Poly]) -> Vec<Poly> {
    let mut sorted: Vec<&Poly> = g.iter().collect();
    sorted.sort_by(|a, b| deg(a).cmp(&deg(b)).then(lc(a).abs().cmp(&lc(b).abs())));
    let mut out: Vec<Poly> = Vec::new();
    for h in sorted {
        let Some(b) = out.last() else {
            out.push(h.clone());
            continue;
        };
        let (gc, u, v) = ext_gcd(lc(b), lc(h));
        if gc == lc(b).abs() {
            continue;
        }
        let mut p = Vec::new();
        add_scaled(&mut p, &u, deg(h) - deg(b), b);
        add_scaled(&mut p, &v, 0, h);
        let p = positive(trim(p));
        if deg(out.last().unwrap()) == deg(&p) {
            out.pop();
        }
        out.push(p);
    }
    let mut red: Vec<Poly> = Vec::new();
    for p in out {
        // Leave the leading term alone, reduce the rest by the lower elements.
        let mut rest = p.clone();
        let top = rest.pop().unwrap();
        let mut r = reduce(&rest, &red);
        r.resize(p.len() - 1, BigInt::zero());
        r.push(top);
        red.push(r);
    }
    red
}

/// `{f : A·f ∈ I}` modulo `I`, computed from the lattice of elements of degree at most
/// the largest basis degree.
fn colon_a(g: &[Poly]) -> Vec<Poly> {
    let dmax = g.iter().map(deg).max().unwrap();
    let mut rows: Vec<Poly> = Vec::new();
    for k in deg(&g[0])..=dmax {
        let h = g.iter().rev().find(|h| deg(h) <= k).unwrap();
        let mut r = Vec::new();
        add_scaled(&mut r, &BigInt::one(), k - deg(h), h);
        rows.push(r);
    }
    let mut kernel = Vec::new();
    let mut pivot: Option<Poly> = None;
    for r in rows {
        if r[0].is_zero() {
            kernel.push(r);
            continue;
        }
        let Some(p) = pivot.take() else {
            pivot = Some(r);
            continue;
        };
        let (gc, u, v) = ext_gcd(&p[0], &r[0]);
        let mut np = Vec::new();
        add_scaled(&mut np, &u, 0, &p);
        add_scaled(&mut np, &v, 0, &r);
        let mut nr = Vec::new();
        add_scaled(&mut nr, &(&r[0] / &gc), 0, &p);
        add_scaled(&mut nr, &-(&p[0] / &gc), 0, &r);
        kernel.push(nr);
        pivot = Some(np);
    }
    kernel
        .into_iter()
        .map(|k| trim(k[1..].to_vec()))
        .filter_map(|k| {
            let r = reduce(&k, g);
            (!r.is_empty()).then_some(r)
        })
        .collect()
}

/// `f = A^k·p(A)` with `p(0) ≠ 0`; returns `p`.
fn strip(f: &LaurentPoly) -> Result<Poly> {
    let u = f
        .to_univariate("A")
        .ok_or_else(|| Error::Mismatch(format!("`{f}` is not a polynomial in A")))?;
    let Some((&lo, _)) = u.iter().next() else {
        return Ok(Vec::new());
    };
    let hi = *u.keys().next_back().unwrap();
    let mut p = vec![BigInt::zero(); (hi - lo) as usize + 1];
    for (k, c) in u {
        p[(k - lo) as usize] = BigInt::from(c);
    }
    Ok(p)
}

fn to_laurent(p: &Poly) -> LaurentPoly {
    LaurentPoly::from_univariate(
        "A",
        p.iter().enumerate().map(|(i, c)| (i as i32, c.to_i128().expect("canonical coefficients fit in i128"))),
    )
}

/// Ideal of `Z[A^±1]` given by the canonical strong Gröbner basis of its contraction to
/// `Z[A]`: ascending degrees, positive leading coefficients each dividing the previous one.
#[derive(Clone, Debug)]
pub struct IdealZA {
    basis: Vec<Poly>,
    fallback_bound: usize,
}

impl IdealZA {
    pub fn new(gens: &[LaurentPoly]) -> Result<Self> {
        let stripped: Vec<Poly> = gens.iter().map(strip).collect::<Result<Vec<_>>>()?;
        let bound = 2 * stripped.iter().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0);
        let mut gens: Vec<Poly> = stripped.into_iter().filter(|p| !p.is_empty()).collect();
        let mut basis = strong_basis(gens.clone());
        while !basis.is_empty() {
            let extra = colon_a(&basis);
            if extra.is_empty() {
                break;
            }
            gens = basis.iter().cloned().chain(extra).collect();
            basis = strong_basis(gens.clone());
        }
        let ideal = IdealZA { basis, fallback_bound: bound };
        debug_assert!(gens_all(&ideal, &gens));
        Ok(ideal)
    }

    pub fn unit() -> Self {
        IdealZA { basis: vec![vec![BigInt::one()]], fallback_bound: 0 }
    }

    pub fn basis(&self) -> Vec<LaurentPoly> {
        self.basis.iter().map(to_laurent).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0] == [BigInt::one()]
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Membership in the extended ideal of `Z[A^±1]`.
    pub fn contains(&self, f: &LaurentPoly) -> bool {
        let Ok(p) = strip(f) else { return false };
        if p.is_empty() {
            return true;
        }
        if reduce(&p, &self.basis).is_empty() {
            return true;
        }
        for m in 1..=self.fallback_bound {
            let mut q = vec![BigInt::zero(); m];
            q.extend_from_slice(&p);
            if reduce(&q, &self.basis).is_empty() {
                FALLBACK_HITS.fetch_add(1, Ordering::Relaxed);
                eprintln!("warning: A-saturation incomplete; A^{m}·f reduced to zero");
                return true;
            }
        }
        false
    }

    pub fn contains_ideal(&self, other: &IdealZA) -> bool {
        other.basis().iter().all(|g| self.contains(g))
    }

    /// Image in `Z[ζ]` under `A ↦ ζ`.
    pub fn at_zeta(&self) -> CyclotomicIdeal {
        let mut rows = Vec::new();
        for g in self.basis() {
            let v = g.eval_all(CyclotomicInt::zeta()).expect("polynomial in A");
            for j in 0..4 {
                rows.push((v * CyclotomicInt::zeta_pow(j)).0);
            }
        }
        CyclotomicIdeal::from_rows(rows)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, 1, "expected `( g1 ; g2 ; … )`"))?;
        let gens: Vec<LaurentPoly> = body
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| LaurentPoly::parse_at(t, 1))
            .collect::<Result<_>>()?;
        Self::new(&gens)
    }
}

impl PartialEq for IdealZA {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for IdealZA {}

fn gens_all(i: &IdealZA, gens: &[Poly]) -> bool {
    gens.iter().all(|g| reduce(g, &i.basis).is_empty())
}

impl fmt::Display for IdealZA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "( 0 )");
        }
        let parts: Vec<String> = self.basis().iter().map(|p| p.to_string()).collect();
        write!(f, "( {} )", parts.join(" ; "))
    }
}

/// Ideal of `Z[ζ]` as the Hermite normal form of its lattice in the basis `1, ζ, ζ², ζ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicIdeal {
    /// Upper triangular rows with positive pivots; entries above a pivot lie in `[0, pivot)`.
    pub hnf: Vec<[Coeff; 4]>,
}

impl CyclotomicIdeal {
    pub fn from_rows(rows: Vec<[Coeff; 4]>) -> Self {
        let mut m: Vec<[Coeff; 4]> = rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
        let mut out: Vec<([Coeff; 4], usize)> = Vec::new();
        for col in 0..4 {
            let mut piv: Option<[Coeff; 4]> = None;
            let mut rest = Vec::new();
            for r in m {
                if r[col] == 0 {
                    rest.push(r);
                    continue;
                }
                let Some(p) = piv.take() else {
                    piv = Some(r);
                    continue;
                };
                let (g, u, v) = ext_gcd_int(p[col], r[col]);
                let (a, b) = (p[col] / g, r[col] / g);
                piv = Some(std::array::from_fn(|i| u * p[i] + v * r[i]));
                rest.push(std::array::from_fn(|i| b * p[i] - a * r[i]));
            }
            m = rest;
            if let Some(mut p) = piv {
                if p[col] < 0 {
                    p = p.map(|x| -x);
                }
                // Reduce the pending rows' later columns is unnecessary; reduce rows above.
                for (q, _) in out.iter_mut() {
                    let f = q[col].div_euclid(p[col]);
                    for i in 0..4 {
                        q[i] -= f * p[i];
                    }
                }
                out.push((p, col));
            }
        }
        CyclotomicIdeal { hnf: out.into_iter().map(|(r, _)| r).collect() }
    }

    pub fn contains(&self, x: &CyclotomicInt) -> bool {
        let mut v = x.0;
        for r in &self.hnf {
            let col = r.iter().position(|&c| c != 0).unwrap();
            if v[col] % r[col] != 0 {
                return false;
            }
            let f = v[col] / r[col];
            for i in 0..4 {
                v[i] -= f * r[i];
            }
        }
        v == [0; 4]
    }

    pub fn is_full(&self) -> bool {
        self.contains(&CyclotomicInt::one())
    }

    /// `Some(n)` when the ideal is `(n)` for a rational integer `n ≥ 0`.
    pub fn as_integer(&self) -> Option<Coeff> {
        if self.hnf.is_empty() {
            return Some(0);
        }
        let n = self.hnf[0][0];
        let want: Vec<[Coeff; 4]> = (0..4).map(|i| std::array::from_fn(|j| if i == j { n } else { 0 })).collect();
        (self.hnf == want).then_some(n)
    }
}

impl fmt::Display for CyclotomicIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "({n})");
        }
        let gens: Vec<String> = self.hnf.iter().map(|r| CyclotomicInt(*r).to_string()).collect();
        write!(f, "Z-span {{ {} }}", gens.join(" ; "))
    }
}

/// Whether the bracket of `d` at `A = ζ` lies in the image of `i`.
pub fn divides_at_zeta(i: &IdealZA, d: &LinkDiagram) -> Result<bool> {
    Ok(i.at_zeta().contains(&crate::skein::bracket_at_zeta(d)?))
}
