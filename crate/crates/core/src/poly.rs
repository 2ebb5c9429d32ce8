//! Exact polynomials over arbitrary-precision integers.
//!
//! [`BiPoly`] is sparse in `x` and `y` and keeps its terms in lexicographic
//! `(i, j)` order, which fixes both the text and the JSON rendering.
//! [`UniPoly`] is a dense coefficient vector in ascending degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Sparse bivariate polynomial. No zero coefficients are stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, 1)
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
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

    /// Terms `(i, j, coefficient)` in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn degree(&self, axis: Axis) -> Result<u32> {
        self.terms()
            .map(|(i, j, _)| match axis {
                Axis::X => i,
                Axis::Y => j,
            })
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    /// `deg_x([y^j] p)`.
    pub fn x_degree_at_y(&self, j: u32) -> Result<u32> {
        self.terms()
            .filter(|&(_, jj, _)| jj == j)
            .map(|(i, _, _)| i)
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    /// `max { deg_x([y^j] p) : j >= threshold }`.
    pub fn x_degree_at_y_at_least(&self, threshold: u32) -> Result<u32> {
        self.terms()
            .filter(|&(_, j, _)| j >= threshold)
            .map(|(i, _, _)| i)
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    /// `deg_y([x^i] p)`.
    pub fn y_degree_at_x(&self, i: u32) -> Result<u32> {
        self.terms
            .range((i, 0)..=(i, u32::MAX))
            .map(|(&(_, j), _)| j)
            .max()
            .ok_or(Error::UndefinedDegree)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms()
            .map(|(i, j, c)| c * x.pow(i) * y.pow(j))
            .fold(BigInt::zero(), |a, b| a + b)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(i, j, c)| serde_json::json!([i, j, c.to_string()]))
                .collect(),
        )
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |why: &str| Error::MalformedPolynomial(format!("{why} in {v}"));
        let arr = v.as_array().ok_or_else(|| bad("expected an array of terms"))?;
        let mut p = BiPoly::zero();
        let mut last: Option<(u32, u32)> = None;
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("expected [i, j, \"c\"]"))?;
            let exp = |x: &Value| {
                x.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("exponent is not a small non-negative integer"))
            };
            let (i, j) = (exp(&t[0])?, exp(&t[1])?);
            let c: BigInt = t[2]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("coefficient is not a decimal string"))?;
            if c.is_zero() {
                return Err(bad("zero coefficient"));
            }
            if last.is_some_and(|l| l >= (i, j)) {
                return Err(bad("terms not in strictly increasing (i, j) order"));
            }
            last = Some((i, j));
            p.add_term(i, j, c);
        }
        Ok(p)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| Error::MalformedPolynomial(format!("invalid JSON: {e}")))?;
        BiPoly::from_json(&v)
    }

    /// Parses the text rendering, e.g. `1 + 3*x*y - x^2*y^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = BiPoly::zero();
        for (sign, body) in split_signed_terms(s)? {
            let (c, e) = parse_monomial(body, &["x", "y"])?;
            p.add_term(e[0], e[1], if sign { -c } else { c });
        }
        Ok(p)
    }
}

/// Splits `a + b - c` into `(negative, term)` pairs.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let s = s.trim();
    let malformed = || Error::MalformedPolynomial(format!("misplaced sign or empty term in {s:?}"));
    let (mut neg, mut start) = match s.chars().next() {
        Some('-') => (true, 1),
        Some('+') => (false, 1),
        Some(_) => (false, 0),
        None => return Err(Error::MalformedPolynomial("empty input".into())),
    };
    let mut out = Vec::new();
    for (k, ch) in s.char_indices().skip(start) {
        if ch == '+' || ch == '-' {
            let body = s[start..k].trim();
            if body.is_empty() {
                return Err(malformed());
            }
            out.push((neg, body));
            neg = ch == '-';
            start = k + 1;
        }
    }
    let body = s[start..].trim();
    if body.is_empty() {
        return Err(malformed());
    }
    out.push((neg, body));
    Ok(out)
}

/// Parses `c*v^e*...` over the given variable names into the coefficient
/// and one exponent per variable.
fn parse_monomial(term: &str, vars: &[&str]) -> Result<(BigInt, Vec<u32>)> {
    let mut c = BigInt::one();
    let mut exps = vec![0u32; vars.len()];
    for factor in term.split('*').map(str::trim) {
        let bad = || Error::MalformedPolynomial(format!("bad factor {factor:?} in term {term:?}"));
        if factor.is_empty() {
            return Err(bad());
        }
        if factor.bytes().all(|b| b.is_ascii_digit()) {
            c *= factor.parse::<BigInt>().map_err(|_| bad())?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => (name.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let k = vars.iter().position(|v| *v == name).ok_or_else(bad)?;
        exps[k] += e;
    }
    Ok((c, exps))
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    powers: &[(&str, u32)],
) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if vars.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(&vars.join("*"))
    } else {
        write!(f, "{mag}*{}", vars.join("*"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, j, c)) in self.terms().enumerate() {
            write_monomial(f, k == 0, c, &[("x", i), ("y", j)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        for ((i, j), c) in small.terms {
            big.add_term(i, j, c);
        }
        big
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k` and
/// the last entry is nonzero unless the polynomial is zero (empty).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::from_coeffs(vec![BigInt::one()])
    }

    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Result<usize> {
        self.coeffs.len().checked_sub(1).ok_or(Error::UndefinedDegree)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| serde_json::json!([k, c.to_string()]))
                .collect(),
        )
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (neg, body) in split_signed_terms(s)? {
            let (c, e) = parse_monomial(body, &["x"])?;
            let k = e[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += if neg { -c } else { c };
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

/// Highest degree first: `x^3 - 2*x`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_monomial(f, first, c, &[("x", k as u32)])?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        UniPoly::from_coeffs(out)
    }
}
