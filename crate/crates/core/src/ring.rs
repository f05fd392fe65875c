//! Sparse integer Laurent polynomials in named variables, together with the
//! cyclotomic ring `Z[ζ]/(ζ⁴ + 1)` used for evaluations at a primitive
//! eighth root of unity.
//!
//! A [`LaurentPoly`] stores only the variables that actually occur, sorted by
//! name, so structural equality is ring equality. Associate classes (equality
//! up to a unit `±x₁^a₁⋯x_d^a_d`) are made literal by [`LaurentPoly::normalize`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

pub type Coeff = i128;

/// A monomial `x₁^a₁⋯x_d^a_d` keyed by variable name. Zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: BTreeMap<String, i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new<S: Into<String>>(pairs: impl IntoIterator<Item = (S, i32)>) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            *exps.entry(v.into()).or_insert(0) += e;
        }
        exps.retain(|_, e| *e != 0);
        Monomial { exps }
    }

    pub fn exponent(&self, var: &str) -> i32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i32)> {
        self.exps.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn degree(&self) -> i32 {
        self.exps.values().sum()
    }
}

/// Sparse Laurent polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, Coeff>,
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

fn grlex_key(e: &[i32]) -> (i64, &[i32]) {
    (e.iter().map(|&x| x as i64).sum(), e)
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        Self::term(1, &Monomial::new([(name, 1)]))
    }

    pub fn term(c: Coeff, m: &Monomial) -> Self {
        Self::from_terms([(m.clone(), c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let terms: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        let mut vars: Vec<String> =
            terms.iter().flat_map(|(m, _)| m.exps.keys().cloned()).collect();
        vars.sort();
        vars.dedup();
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            let key: Vec<i32> = vars.iter().map(|v| m.exponent(v)).collect();
            *out.entry(key).or_insert(0) += c;
        }
        Self::from_raw(vars, out)
    }

    /// Univariate polynomial `Σ c_k · var^k`.
    pub fn from_univariate(var: &str, coeffs: impl IntoIterator<Item = (i32, Coeff)>) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs {
            *terms.entry(vec![k]).or_insert(0) += c;
        }
        Self::from_raw(vec![var.to_string()], terms)
    }

    /// Exponent/coefficient pairs if the polynomial involves at most `var`.
    pub fn to_univariate(&self, var: &str) -> Option<BTreeMap<i32, Coeff>> {
        match self.vars.as_slice() {
            [] => Some(self.terms.values().map(|c| (0, *c)).collect()),
            [v] if v == var => Some(self.terms.iter().map(|(e, c)| (e[0], *c)).collect()),
            _ => None,
        }
    }

    fn from_raw(vars: Vec<String>, mut terms: BTreeMap<Vec<i32>, Coeff>) -> Self {
        terms.retain(|_, c| *c != 0);
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return LaurentPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let vars2 = keep.iter().map(|&i| vars[i].clone()).collect();
        let mut t2 = BTreeMap::new();
        for (e, c) in terms {
            t2.insert(keep.iter().map(|&i| e[i]).collect::<Vec<_>>(), c);
        }
        LaurentPoly { vars: vars2, terms: t2 }
    }

    fn aligned(&self, vars: &[String]) -> BTreeMap<Vec<i32>, Coeff> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let idx: Vec<Option<usize>> =
            vars.iter().map(|v| self.vars.iter().position(|w| w == v)).collect();
        self.terms
            .iter()
            .map(|(e, c)| (idx.iter().map(|i| i.map_or(0, |i| e[i])).collect(), *c))
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Coeff)> + '_ {
        self.terms.iter().map(move |(e, c)| {
            (Monomial::new(self.vars.iter().map(|v| v.as_str()).zip(e.iter().copied())), *c)
        })
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        if !self.vars.is_empty() {
            return None;
        }
        Some(self.terms.values().next().copied().unwrap_or(0))
    }

    /// `±` a monomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Gcd of the integer coefficients (nonnegative).
    pub fn content(&self) -> Coeff {
        self.terms.values().fold(0, |g, c| g.gcd(c))
    }

    pub fn scale(&self, k: Coeff) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `k`; `None` if some coefficient is not divisible.
    pub fn div_scalar(&self, k: Coeff) -> Option<Self> {
        if k == 0 || self.terms.values().any(|c| c % k != 0) {
            return None;
        }
        Some(LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c / k)).collect(),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self * &Self::term(1, m)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Minimum and maximum exponent of `var` over all terms (`None` for zero).
    pub fn degree_range(&self, var: &str) -> Option<(i32, i32)> {
        if self.is_zero() {
            return None;
        }
        match self.vars.iter().position(|v| v == var) {
            None => Some((0, 0)),
            Some(i) => {
                let lo = self.terms.keys().map(|e| e[i]).min().unwrap();
                let hi = self.terms.keys().map(|e| e[i]).max().unwrap();
                Some((lo, hi))
            }
        }
    }

    /// Coefficient of `var^k`, a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: &str, k: i32) -> Self {
        match self.vars.iter().position(|v| v == var) {
            None if k == 0 => self.clone(),
            None => Self::zero(),
            Some(i) => {
                let terms = self
                    .terms
                    .iter()
                    .filter(|(e, _)| e[i] == k)
                    .map(|(e, c)| {
                        let mut e = e.clone();
                        e[i] = 0;
                        (e, *c)
                    })
                    .collect();
                Self::from_raw(self.vars.clone(), terms)
            }
        }
    }

    fn min_max_exps(&self) -> (Vec<i32>, Vec<i32>) {
        let n = self.vars.len();
        let mut lo = vec![i32::MAX; n];
        let mut hi = vec![i32::MIN; n];
        for e in self.terms.keys() {
            for i in 0..n {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Graded-lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(Monomial, Coeff)> {
        let (e, c) = self.terms.iter().max_by(|a, b| grlex_key(a.0).cmp(&grlex_key(b.0)))?;
        Some((Monomial::new(self.vars.iter().map(|v| v.as_str()).zip(e.iter().copied())), *c))
    }

    /// Canonical associate together with the unit `u` such that `normalize(p) = u·p`.
    pub fn normalize_with_unit(&self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::zero(), Self::one());
        }
        let (lo, _) = self.min_max_exps();
        let shifted: BTreeMap<Vec<i32>, Coeff> = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(&lo).map(|(a, b)| a - b).collect(), *c))
            .collect();
        let lead = shifted
            .iter()
            .max_by(|a, b| grlex_key(a.0).cmp(&grlex_key(b.0)))
            .map(|(_, c)| *c)
            .unwrap();
        let sign = if lead < 0 { -1 } else { 1 };
        let shifted = shifted.into_iter().map(|(e, c)| (e, c * sign)).collect();
        let mut ut = BTreeMap::new();
        ut.insert(lo.iter().map(|x| -x).collect(), sign);
        (
            Self::from_raw(self.vars.clone(), shifted),
            Self::from_raw(self.vars.clone(), ut),
        )
    }

    /// Canonical representative of the associate class of `self`.
    pub fn normalize(&self) -> Self {
        self.normalize_with_unit().0
    }

    /// `self ≐ other` (equal up to a unit of the Laurent ring).
    pub fn associate(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Exact quotient `self / q` in the Laurent ring, or `None` if `q` does not divide `self`.
    pub fn div_exact(&self, q: &Self) -> Option<Self> {
        if q.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(k) = q.constant_value() {
            return self.div_scalar(k);
        }
        let vars = merge_vars(&self.vars, &q.vars);
        let p = Self::from_raw_nocheck(vars.clone(), self.aligned(&vars));
        let qa = q.aligned(&vars);
        let (plo, phi) = p.min_max_exps();
        let qq = Self::from_raw_nocheck(vars.clone(), qa.clone());
        let (qlo, qhi) = qq.min_max_exps();
        let (qlead_e, qlead_c) = qa.iter().next_back().map(|(e, c)| (e.clone(), *c)).unwrap();
        let n = vars.len();
        let mut rem = p.terms;
        let mut quot: BTreeMap<Vec<i32>, Coeff> = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            if c % qlead_c != 0 {
                return None;
            }
            let te: Vec<i32> = (0..n).map(|i| e[i] - qlead_e[i]).collect();
            if (0..n).any(|i| te[i] < plo[i] - qlo[i] || te[i] > phi[i] - qhi[i]) {
                return None;
            }
            let tc = c / qlead_c;
            for (qe, qc) in &qa {
                let k: Vec<i32> = (0..n).map(|i| qe[i] + te[i]).collect();
                let slot = rem.entry(k).or_insert(0);
                *slot -= qc * tc;
                if *slot == 0 {
                    let k: Vec<i32> = (0..n).map(|i| qe[i] + te[i]).collect();
                    rem.remove(&k);
                }
            }
            quot.insert(te, tc);
        }
        Some(Self::from_raw(vars, quot))
    }

    fn from_raw_nocheck(vars: Vec<String>, terms: BTreeMap<Vec<i32>, Coeff>) -> Self {
        LaurentPoly { vars, terms }
    }

    /// `self` divides `other` in the Laurent ring. Zero divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.div_exact(self).is_some()
    }

    /// Greatest common divisor in canonical form; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        gcd_poly(&self.normalize(), &other.normalize()).normalize()
    }

    pub fn rename(&self, from: &str, to: &str) -> Self {
        Self::from_terms(self.terms().map(|(m, c)| {
            (Monomial::new(m.iter().map(|(v, e)| (if v == from { to } else { v }, e))), c)
        }))
    }

    /// Substitute a polynomial for `var`. Negative exponents require `value` to be a unit.
    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        let inv = if value.is_unit() {
            let (m, c) = value.terms().next().unwrap();
            Some(Self::term(c, &Monomial::new(m.iter().map(|(v, e)| (v.to_string(), -e)))))
        } else {
            None
        };
        let mut cache: BTreeMap<i32, Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[i];
            let pw = match cache.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = if k >= 0 {
                        value.pow(k as u32)
                    } else {
                        inv.as_ref().ok_or_else(|| Error::NonInvertible(var.to_string()))?.pow((-k) as u32)
                    };
                    cache.insert(k, p.clone());
                    p
                }
            };
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = Self::from_raw(self.vars.clone(), BTreeMap::from([(rest, *c)]));
            out += &(&mono * &pw);
        }
        Ok(out)
    }

    /// Ring homomorphism into `R` determined by `assignment`.
    pub fn eval<R: EvalRing>(&self, assignment: &BTreeMap<String, R>) -> Result<R> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let x = assignment.get(v).ok_or_else(|| Error::Unassigned(v.clone()))?;
            vals.push((x.clone(), x.inverse()));
        }
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = R::from_int(*c);
            for (i, &k) in e.iter().enumerate() {
                let base = if k >= 0 {
                    vals[i].0.clone()
                } else {
                    vals[i].1.clone().ok_or_else(|| Error::NonInvertible(self.vars[i].clone()))?
                };
                t = t * base.pow(k.unsigned_abs());
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluate every variable at the same value.
    pub fn eval_all<R: EvalRing>(&self, value: R) -> Result<R> {
        let a = self.vars.iter().map(|v| (v.clone(), value.clone())).collect();
        self.eval(&a)
    }

    pub fn parse_at(s: &str, line: usize) -> Result<Self> {
        Parser { s: s.as_bytes(), pos: 0, line }.parse_all()
    }
}

fn gcd_poly(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let vars = merge_vars(&a.vars, &b.vars);
    let Some(v) = vars.first() else {
        return LaurentPoly::constant(a.constant_value().unwrap().gcd(&b.constant_value().unwrap()));
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_poly(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    (&c * &g).normalize()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &LaurentPoly, v: &str) -> LaurentPoly {
    let Some((lo, hi)) = p.degree_range(v) else {
        return LaurentPoly::zero();
    };
    let mut g = LaurentPoly::zero();
    for k in lo..=hi {
        let c = p.coeff_in(v, k);
        if !c.is_zero() {
            g = gcd_poly(&g, &c);
            if g.is_unit() {
                break;
            }
        }
    }
    g
}

fn deg_in(p: &LaurentPoly, v: &str) -> i32 {
    p.degree_range(v).map_or(-1, |r| r.1)
}

fn primitive_prs(a: LaurentPoly, b: LaurentPoly, v: &str) -> LaurentPoly {
    // Normalizing strips monomial factors, so a v-degree of zero really means a unit.
    let (mut a, mut b) = (a.normalize(), b.normalize());
    if deg_in(&a, v) < deg_in(&b, v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if deg_in(&b, v) == 0 {
            // b is primitive and constant in v, hence a unit
            return LaurentPoly::one();
        }
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return b.normalize();
        }
        let cr = content_in(&r, v);
        a = b;
        b = r.div_exact(&cr).expect("content divides").normalize();
    }
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, v: &str) -> LaurentPoly {
    let db = deg_in(b, v);
    let lb = b.coeff_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && deg_in(&r, v) >= db {
        let dr = deg_in(&r, v);
        let lr = r.coeff_in(v, dr);
        let shift = LaurentPoly::term(1, &Monomial::new([(v, dr - db)]));
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let vars = merge_vars(&self.vars, &o.vars);
        let mut t = self.aligned(&vars);
        for (e, c) in o.aligned(&vars) {
            *t.entry(e).or_insert(0) += c;
        }
        LaurentPoly::from_raw(vars, t)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let vars = merge_vars(&self.vars, &o.vars);
        let a = self.aligned(&vars);
        let b = o.aligned(&vars);
        let mut t: BTreeMap<Vec<i32>, Coeff> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *t.entry(e).or_insert(0) += ca * cb;
            }
        }
        LaurentPoly::from_raw(vars, t)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly { (&self).$m(&o) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        *self = &*self + o;
    }
}

impl From<Coeff> for LaurentPoly {
    fn from(c: Coeff) -> Self {
        LaurentPoly::constant(c)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<i32>, &Coeff)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex_key(b.0).cmp(&grlex_key(a.0)));
        for (i, (e, &c)) in terms.into_iter().enumerate() {
            let neg = c < 0;
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            if a != 1 || e.iter().all(|&x| x == 0) {
                parts.push(a.to_string());
            }
            for (v, &k) in self.vars.iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{k}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LaurentPoly::parse_at(s, 1)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::parse(self.line, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<LaurentPoly> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc += &t.scale(sign);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                // implicit product `2x`, `x(y+1)`; a bare number must follow `*`
                Some(c) if c.is_ascii_alphabetic() || c == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(self.line, start + 1, "expected integer"))
    }

    fn exponent(&mut self) -> Result<Option<i32>> {
        if self.peek() != Some(b'^') {
            return Ok(None);
        }
        self.pos += 1;
        let sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        let k = self.integer()?;
        i32::try_from(k * sign).map(Some).map_err(|_| self.err("exponent out of range"))
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(LaurentPoly::constant(n as Coeff))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
                let k = self.exponent()?.unwrap_or(1);
                Ok(LaurentPoly::term(1, &Monomial::new([(name, k)])))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                match self.exponent()? {
                    None => Ok(inner),
                    Some(k) if k >= 0 => Ok(inner.pow(k as u32)),
                    Some(_) => Err(self.err("negative power of a parenthesized expression")),
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

/// Target rings for [`LaurentPoly::eval`].
pub trait EvalRing: Clone + Add<Output = Self> + Mul<Output = Self> {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(c: Coeff) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl EvalRing for Coeff {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_int(c: Coeff) -> Self {
        c
    }
    fn inverse(&self) -> Option<Self> {
        (self.abs() == 1).then_some(*self)
    }
    fn pow(&self, n: u32) -> Self {
        Coeff::pow(*self, n)
    }
}

/// Element `c₀ + c₁ζ + c₂ζ² + c₃ζ³` of `Z[ζ]/(ζ⁴ + 1)`, ζ a primitive eighth root of unity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclotomicInt(pub [Coeff; 4]);

/// Result of [`CyclotomicInt::abs_norm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsNorm {
    Integer(Coeff),
    NonRational,
}

impl CyclotomicInt {
    pub fn zeta() -> Self {
        CyclotomicInt([0, 1, 0, 0])
    }

    pub fn zeta_pow(k: i32) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        CyclotomicInt(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// The rational integer `n` if `self = n`.
    pub fn as_integer(&self) -> Option<Coeff> {
        (self.0[1..] == [0, 0, 0]).then_some(self.0[0])
    }

    /// Galois automorphism `ζ ↦ ζ^k` for odd `k`.
    pub fn conjugate(&self, k: i32) -> Self {
        (0..4).fold(Self::default(), |acc, i| {
            acc + Self::zeta_pow(i as i32 * k) * Self::from_int(self.0[i])
        })
    }

    /// Field norm to Q, the product of the four Galois conjugates.
    pub fn norm(&self) -> Coeff {
        let p = *self * self.conjugate(3) * self.conjugate(5) * self.conjugate(7);
        p.as_integer().expect("norm is rational")
    }

    /// Absolute value of the rational integer `n` when `self` is `n` times a root of unity;
    /// otherwise the fourth root of the field norm when that is an integer.
    pub fn abs_norm(&self) -> AbsNorm {
        for k in 0..8 {
            if let Some(n) = (*self * Self::zeta_pow(-k)).as_integer() {
                return AbsNorm::Integer(n.abs());
            }
        }
        let nm = self.norm();
        if nm >= 0 {
            let r = (nm as f64).powf(0.25).round() as Coeff;
            for c in [r - 1, r, r + 1] {
                if c >= 0 && c.pow(4) == nm {
                    return AbsNorm::Integer(c);
                }
            }
        }
        AbsNorm::NonRational
    }
}

impl Add for CyclotomicInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.0;
        for i in 0..4 {
            c[i] += o.0[i];
        }
        CyclotomicInt(c)
    }
}

impl Sub for CyclotomicInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CyclotomicInt {
    type Output = Self;
    fn neg(self) -> Self {
        CyclotomicInt(self.0.map(|x| -x))
    }
}

impl Mul for CyclotomicInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut c = [0 as Coeff; 4];
        for i in 0..4 {
            for j in 0..4 {
                let p = self.0[i] * o.0[j];
                if i + j < 4 {
                    c[i + j] += p;
                } else {
                    c[i + j - 4] -= p;
                }
            }
        }
        CyclotomicInt(c)
    }
}

impl EvalRing for CyclotomicInt {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        CyclotomicInt([1, 0, 0, 0])
    }
    fn from_int(c: Coeff) -> Self {
        CyclotomicInt([c, 0, 0, 0])
    }
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.abs() != 1 {
            return None;
        }
        let rest = self.conjugate(3) * self.conjugate(5) * self.conjugate(7);
        Some(rest * Self::from_int(n))
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = LaurentPoly::from_univariate("zeta", (0..4).map(|i| (i as i32, self.0[i])));
        write!(f, "{p}")
    }
}

/// Nonnegative integer gcd with `gcd(0, m) = |m|`.
pub fn int_gcd(a: Coeff, b: Coeff) -> Coeff {
    a.gcd(&b).abs()
}
