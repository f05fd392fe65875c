//! Exact matrices over the Laurent rings: minors, elementary divisors, Smith normal form.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{int_gcd, Coeff, LaurentPoly};

/// Default limit on the number of minors enumerated by [`elementary_divisor`].
pub const DEFAULT_MINOR_CAP: usize = 2_000_000;

/// Ring operations needed by the generic matrix routines.
pub trait Entry: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact quotient; `None` if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

/// A Euclidean domain with a canonical choice of associate.
pub trait Euclidean: Entry {
    /// Euclidean size; units have size 0.
    fn size(&self) -> u64;
    fn div_rem(&self, d: &Self) -> (Self, Self);
    /// `(c, u)` with `c = u·self` canonical and `u` a unit.
    fn normalize(&self) -> (Self, Self);
}

impl Entry for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, d)
    }
}

impl Entry for Coeff {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (*d != 0 && self % d == 0).then(|| self / d)
    }
}

impl Euclidean for Coeff {
    fn size(&self) -> u64 {
        if self.abs() <= 1 {
            0
        } else {
            self.unsigned_abs().min(u64::MAX as u128) as u64
        }
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        (self.div_euclid(*d), self.rem_euclid(*d))
    }
    fn normalize(&self) -> (Self, Self) {
        if *self < 0 {
            (-self, -1)
        } else {
            (*self, 1)
        }
    }
}

type Q = Ratio<Coeff>;

/// Univariate Laurent polynomial with rational coefficients: `Σ c[i]·x^(low+i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QLaurent {
    low: i32,
    c: Vec<Q>,
}

impl QLaurent {
    fn new(low: i32, mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let lead = c.iter().take_while(|x| x.is_zero()).count();
        if lead == c.len() {
            return QLaurent { low: 0, c: Vec::new() };
        }
        c.drain(..lead);
        QLaurent { low: low + lead as i32, c }
    }

    pub fn constant(q: Q) -> Self {
        Self::new(0, vec![q])
    }

    pub fn monomial(q: Q, k: i32) -> Self {
        Self::new(k, vec![q])
    }

    pub fn from_laurent(p: &LaurentPoly, var: &str) -> Result<Self> {
        let u = p
            .to_univariate(var)
            .ok_or_else(|| Error::Unsupported(format!("`{p}` is not univariate in `{var}`")))?;
        let Some((&lo, _)) = u.iter().next() else {
            return Ok(Self::new(0, vec![]));
        };
        let hi = *u.keys().last().unwrap();
        let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
        for (k, v) in u {
            c[(k - lo) as usize] = Q::from_integer(v);
        }
        Ok(Self::new(lo, c))
    }

    /// Back to an integer Laurent polynomial, if all coefficients are integers.
    pub fn to_laurent(&self, var: &str) -> Option<LaurentPoly> {
        let mut t = Vec::new();
        for (i, q) in self.c.iter().enumerate() {
            if !q.is_integer() {
                return None;
            }
            t.push((self.low + i as i32, q.to_integer()));
        }
        Some(LaurentPoly::from_univariate(var, t))
    }

    /// Integer-primitive canonical associate: denominators cleared, content removed.
    pub fn primitive(&self, var: &str) -> LaurentPoly {
        let lcm = self.c.iter().fold(1, |l: Coeff, q| l / int_gcd(l, *q.denom()) * q.denom());
        let p = LaurentPoly::from_univariate(var, self.c.iter().enumerate().map(|(i, q)| (self.low + i as i32, (q * lcm).to_integer())));
        let g = p.content();
        p.div_scalar(g.max(1)).unwrap_or(p).normalize()
    }

    fn high(&self) -> i32 {
        self.low + self.c.len() as i32 - 1
    }

    fn lead(&self) -> Q {
        *self.c.last().unwrap()
    }

    fn scale(&self, q: Q, shift: i32) -> Self {
        Self::new(self.low + shift, self.c.iter().map(|x| x * q).collect())
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, q) in self.c.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let k = self.low + i as i32;
            let sep = match (first, q.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let a = q.abs();
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            match (a.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "{sep}1")?,
                (true, false) => write!(f, "{sep}{mono}")?,
                (false, true) => write!(f, "{sep}{a}")?,
                (false, false) => write!(f, "{sep}{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl Entry for QLaurent {
    fn zero() -> Self {
        Self::new(0, vec![])
    }
    fn one() -> Self {
        Self::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(o.low);
        let hi = self.high().max(o.high());
        let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.low - lo) as usize + i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[(o.low - lo) as usize + i] += x;
        }
        Self::new(lo, c)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-Q::one(), 0))
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(self.low + o.low, c)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Euclidean for QLaurent {
    fn size(&self) -> u64 {
        self.c.len().saturating_sub(1) as u64
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        // Divide the polynomial parts, then restore the shifts.
        let mut r: Vec<Q> = self.c.clone();
        let dl = d.c.len();
        if r.len() < dl {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Q::zero(); r.len() - dl + 1];
        let lead = d.lead();
        for i in (0..q.len()).rev() {
            let f = r[i + dl - 1] / lead;
            if f.is_zero() {
                continue;
            }
            q[i] = f;
            for (j, y) in d.c.iter().enumerate() {
                r[i + j] -= f * y;
            }
        }
        (Self::new(self.low - d.low, q), Self::new(self.low, r))
    }
    fn normalize(&self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::zero(), Self::one());
        }
        // Integer-primitive, lowest exponent 0, positive leading coefficient.
        let den = self.c.iter().fold(1, |acc, q| num_integer::lcm(acc, *q.denom()));
        let num = self
            .c
            .iter()
            .fold(0, |acc, q| int_gcd(acc, (q * Q::from_integer(den)).to_integer()));
        let mut u = Q::new(den, num);
        if self.lead().is_negative() {
            u = -u;
        }
        let unit = QLaurent::monomial(u, -self.low);
        (self.mul(&unit), unit)
    }
}

/// Dense `rows × cols` matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<T = LaurentPoly> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Entry> RingMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Mismatch("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(RingMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// An empty matrix that still records its column count.
    pub fn with_cols(cols: usize) -> Self {
        RingMatrix { rows: 0, cols, entries: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn map<S: Entry>(&self, f: impl Fn(&T) -> S) -> RingMatrix<S> {
        RingMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<S: Entry>(&self, f: impl Fn(&T) -> Result<S>) -> Result<RingMatrix<S>> {
        let entries = self.entries.iter().map(f).collect::<Result<_>>()?;
        Ok(RingMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Mismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(o.get(k, j)));
                    }
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `col[dst] += f · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        for i in 0..self.rows {
            let v = self.get(i, dst).add(&f.mul(self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    fn scale_row(&mut self, i: usize, f: &T) {
        for j in 0..self.cols {
            let v = f.mul(self.get(i, j));
            self.set(i, j, v);
        }
    }

}

impl<T: Entry> fmt::Display for RingMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" , "))?;
        }
        Ok(())
    }
}

impl RingMatrix<LaurentPoly> {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let body = line.trim_start_matches('[').trim_end_matches(']');
            let row = body
                .split(',')
                .map(|c| LaurentPoly::parse_at(c.trim(), ln + 1))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

/// Fraction-free elimination. Returns the rank and, for square input, the determinant.
fn bareiss<T: Entry>(m: &RingMatrix<T>) -> (usize, T) {
    let mut a = m.clone();
    let mut prev = T::one();
    let mut rank = 0;
    let mut sign_neg = false;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(p) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap_rows(p, rank);
            sign_neg = !sign_neg;
        }
        let piv = a.get(rank, col).clone();
        for i in rank + 1..a.rows {
            let f = a.get(i, col).clone();
            for j in col + 1..a.cols {
                let v = a.get(i, j).mul(&piv).sub(&f.mul(a.get(rank, j)));
                let v = v.div_exact(&prev).expect("fraction-free elimination is exact");
                a.set(i, j, v);
            }
            a.set(i, col, T::zero());
        }
        prev = piv;
        rank += 1;
    }
    let det = if a.rows == a.cols && rank == a.rows {
        if a.rows == 0 {
            T::one()
        } else if sign_neg {
            T::zero().sub(&prev)
        } else {
            prev
        }
    } else {
        T::zero()
    };
    (rank, det)
}

pub fn determinant<T: Entry>(m: &RingMatrix<T>) -> Result<T> {
    if m.rows != m.cols {
        return Err(Error::Mismatch(format!("determinant of {}x{} matrix", m.rows, m.cols)));
    }
    Ok(bareiss(m).1)
}

/// Rank over the fraction field.
pub fn rank_over_fractions<T: Entry>(m: &RingMatrix<T>) -> usize {
    bareiss(m).0
}

/// Advance `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    r as usize
}

/// gcd of all `m × m` minors, canonical; `cap` bounds the number of minors examined.
pub fn minor_gcd(mat: &RingMatrix<LaurentPoly>, m: usize, cap: usize) -> Result<LaurentPoly> {
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    // Zero rows contribute only zero minors.
    let live: Vec<usize> = (0..mat.rows).filter(|&i| mat.row(i).iter().any(|x| !x.is_zero())).collect();
    if live.len() < m || mat.cols < m {
        return Ok(LaurentPoly::zero());
    }
    let count = binomial(live.len(), m).saturating_mul(binomial(mat.cols, m));
    if count > cap {
        return Err(Error::CapExceeded { what: "minor", got: count, cap });
    }
    let mut g = LaurentPoly::zero();
    let mut rc: Vec<usize> = (0..m).collect();
    loop {
        let rows: Vec<usize> = rc.iter().map(|&i| live[i]).collect();
        let sub_rows = mat.select(&rows, &(0..mat.cols).collect::<Vec<_>>());
        if rank_over_fractions(&sub_rows) == m {
            let mut cc: Vec<usize> = (0..m).collect();
            loop {
                let d = bareiss(&sub_rows.select(&(0..m).collect::<Vec<_>>(), &cc)).1;
                if !d.is_zero() {
                    g = g.gcd(&d);
                    if g.is_unit() {
                        return Ok(LaurentPoly::one());
                    }
                }
                if !next_combination(&mut cc, mat.cols) {
                    break;
                }
            }
        }
        if !next_combination(&mut rc, live.len()) {
            break;
        }
    }
    Ok(g)
}

/// Elementary divisor `Δ_k` of the module with `q` generators presented by the rows of `m`.
pub fn elementary_divisor(m: &RingMatrix<LaurentPoly>, q: usize, k: i64, cap: usize) -> Result<LaurentPoly> {
    if m.cols != q {
        return Err(Error::Mismatch(format!("matrix has {} columns, expected {q}", m.cols)));
    }
    if k < 0 {
        return Ok(LaurentPoly::zero());
    }
    if k as usize >= q {
        return Ok(LaurentPoly::one());
    }
    minor_gcd(m, q - k as usize, cap)
}

/// Index and value of the first nonzero elementary divisor.
pub fn first_nonzero_elementary_divisor(m: &RingMatrix<LaurentPoly>, cap: usize) -> Result<(usize, LaurentPoly)> {
    let q = m.cols;
    let r = rank_over_fractions(m);
    let k = q - r;
    Ok((k, elementary_divisor(m, q, k as i64, cap)?))
}

/// `U·M·V = S` with `S` diagonal and `S[i][i] | S[i+1][i+1]`.
#[derive(Clone, Debug)]
pub struct SnfResult<T> {
    pub u: RingMatrix<T>,
    pub s: RingMatrix<T>,
    pub v: RingMatrix<T>,
    /// Canonical diagonal entries, `min(rows, cols)` of them, zeros last.
    pub diagonal: Vec<T>,
}

impl<T: Euclidean> SnfResult<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form over a Euclidean domain.
///
/// Pivots are combined with Bézout transformations rather than repeated remainders,
/// which keeps rational coefficients small.
pub fn smith_normal_form<T: Euclidean>(m: &RingMatrix<T>) -> SnfResult<T> {
    let (p, q) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = RingMatrix::<T>::identity(p);
    let mut v = RingMatrix::<T>::identity(q);
    for t in 0..p.min(q) {
        let mut best: Option<(usize, usize, u64)> = None;
        for i in t..p {
            for j in t..q {
                let e = s.get(i, j);
                if !e.is_zero() && best.is_none_or(|b| e.size() < b.2) {
                    best = Some((i, j, e.size()));
                }
            }
        }
        let Some((bi, bj, _)) = best else {
            break;
        };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            for i in t + 1..p {
                if !s.get(i, t).is_zero() {
                    let (a, b) = (s.get(t, t).clone(), s.get(i, t).clone());
                    let op = bezout(&a, &b);
                    combine_rows(&mut s, t, i, &op);
                    combine_rows(&mut u, t, i, &op);
                }
            }
            let (_, unit) = s.get(t, t).normalize();
            s.scale_row(t, &unit);
            u.scale_row(t, &unit);
            for j in t + 1..q {
                if !s.get(t, j).is_zero() {
                    let (a, b) = (s.get(t, t).clone(), s.get(t, j).clone());
                    let op = bezout(&a, &b);
                    combine_cols(&mut s, t, j, &op);
                    combine_cols(&mut v, t, j, &op);
                }
            }
            if (t + 1..p).any(|i| !s.get(i, t).is_zero()) {
                continue;
            }
            let piv = s.get(t, t).clone();
            let bad = (t + 1..q).find(|&j| (t + 1..p).any(|i| s.get(i, j).div_exact(&piv).is_none()));
            match bad {
                // Pull the offending column into column t; the next pass lowers the pivot.
                Some(j) => {
                    s.add_col(t, j, &T::one());
                    v.add_col(t, j, &T::one());
                }
                None => break,
            }
        }
    }
    let mut diagonal = Vec::new();
    for t in 0..p.min(q) {
        let (c, unit) = s.get(t, t).normalize();
        if !c.is_zero() {
            s.scale_row(t, &unit);
            u.scale_row(t, &unit);
        }
        diagonal.push(c);
    }
    SnfResult { u, s, v, diagonal }
}

/// Unimodular `[[x, y], [z, w]]` sending `(a, b)` to `(g, 0)`.
fn bezout<T: Euclidean>(a: &T, b: &T) -> [T; 4] {
    if let Some(k) = b.div_exact(a) {
        return [T::one(), T::zero(), T::zero().sub(&k), T::one()];
    }
    // Extended Euclid: keep (r0, s0, t0) with r0 = s0·a + t0·b.
    let (mut r0, mut s0, mut t0) = (a.clone(), T::one(), T::zero());
    let (mut r1, mut s1, mut t1) = (b.clone(), T::zero(), T::one());
    while !r1.is_zero() {
        let (qt, r) = r0.div_rem(&r1);
        let s2 = s0.sub(&qt.mul(&s1));
        let t2 = t0.sub(&qt.mul(&t1));
        (r0, s0, t0) = (r1, s1, t1);
        (r1, s1, t1) = (r, s2, t2);
    }
    let z = T::zero().sub(&b.div_exact(&r0).expect("gcd divides"));
    let w = a.div_exact(&r0).expect("gcd divides");
    [s0, t0, z, w]
}

fn combine_rows<T: Entry>(m: &mut RingMatrix<T>, a: usize, b: usize, op: &[T; 4]) {
    for j in 0..m.cols {
        let (x, y) = (m.get(a, j).clone(), m.get(b, j).clone());
        m.set(a, j, op[0].mul(&x).add(&op[1].mul(&y)));
        m.set(b, j, op[2].mul(&x).add(&op[3].mul(&y)));
    }
}

fn combine_cols<T: Entry>(m: &mut RingMatrix<T>, a: usize, b: usize, op: &[T; 4]) {
    for i in 0..m.rows {
        let (x, y) = (m.get(i, a).clone(), m.get(i, b).clone());
        m.set(i, a, op[0].mul(&x).add(&op[1].mul(&y)));
        m.set(i, b, op[2].mul(&x).add(&op[3].mul(&y)));
    }
}

/// Convert an integer-constant matrix.
pub fn to_integer_matrix(m: &RingMatrix<LaurentPoly>) -> Result<RingMatrix<Coeff>> {
    m.try_map(|p| {
        if p.is_zero() {
            return Ok(0);
        }
        p.constant_value()
            .ok_or_else(|| Error::Unsupported(format!("non-constant entry `{p}` in an integer matrix")))
    })
}

/// Convert a matrix over `Z[var^±1]` to rational coefficients.
pub fn to_rational_laurent(m: &RingMatrix<LaurentPoly>, var: &str) -> Result<RingMatrix<QLaurent>> {
    m.try_map(|p| QLaurent::from_laurent(p, var))
}

/// Block-diagonal sum.
pub fn direct_sum<T: Entry>(a: &RingMatrix<T>, b: &RingMatrix<T>) -> RingMatrix<T> {
    let mut m = RingMatrix::zeros(a.rows + b.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
        }
    }
    m
}

/// Exponent → coefficient view used by tests and printing.
pub fn qlaurent_coeffs(p: &QLaurent) -> BTreeMap<i32, Q> {
    p.c.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(i, q)| (p.low + i as i32, *q)).collect()
}

#[cfg(test)]
mod tests;
