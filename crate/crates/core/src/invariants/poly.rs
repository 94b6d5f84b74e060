//! Laurent polynomials in one variable with integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// `Σ coeffs[k] · x^(lo + k)`, kept trimmed: no zero at either end, and the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone)]
pub struct LaurentPoly {
    var: char,
    lo: i32,
    coeffs: Vec<i64>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo
            && self.coeffs == other.coeffs
            && (self.var == other.var || self.is_constant())
    }
}

impl Eq for LaurentPoly {}

impl Hash for LaurentPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lo.hash(state);
        self.coeffs.hash(state);
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        LaurentPoly::zero()
    }
}

impl LaurentPoly {
    pub const DEFAULT_VAR: char = 'A';

    pub fn zero() -> Self {
        LaurentPoly {
            var: Self::DEFAULT_VAR,
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        Self::monomial_in(Self::DEFAULT_VAR, c, exp)
    }

    pub fn monomial_in(var: char, c: i64, exp: i32) -> Self {
        LaurentPoly {
            var,
            lo: exp,
            coeffs: vec![c],
        }
        .trimmed()
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(var: char, terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = LaurentPoly { var, ..Self::zero() };
        for (e, c) in terms {
            out += LaurentPoly::monomial_in(var, c, e);
        }
        out
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.coeffs.len() == 1)
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs == [1]
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.lo;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.lo + k as i32, c))
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    fn join_var(&self, other: &Self) -> char {
        if self.is_constant() {
            other.var
        } else {
            if !other.is_constant() {
                assert_eq!(self.var, other.var, "mixing Laurent polynomials in different variables");
            }
            self.var
        }
    }

    /// A unit of `ℤ[x, x⁻¹]`, i.e. `±x^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs() == 1
    }

    pub fn inverse(&self) -> Option<Self> {
        self.is_unit().then(|| LaurentPoly {
            var: self.var,
            lo: -self.lo,
            coeffs: vec![self.coeffs[0]],
        })
    }

    /// Integer power; negative powers need a unit.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let (base, e) = if e < 0 {
            (self.inverse()?, (-e) as u64)
        } else {
            (self.clone(), e as u64)
        };
        let mut out = LaurentPoly::one().with_var(self.var);
        for _ in 0..e {
            out = &out * &base;
        }
        Some(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        LaurentPoly {
            var: self.var,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .trimmed()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            lo: self.lo + k,
            ..self.clone()
        }
    }

    /// `self / d` when the quotient is again a Laurent polynomial with
    /// integer coefficients.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero().with_var(self.join_var(d)));
        }
        let var = self.join_var(d);
        let dlead = *d.coeffs.last().unwrap();
        let dtop = d.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero().with_var(var);
        // Long division from the top; the remainder must vanish once its
        // span is shorter than the divisor's.
        while !rem.is_zero() {
            let span = rem.coeffs.len();
            if span < d.coeffs.len() {
                return None;
            }
            let rtop = rem.max_exp().unwrap();
            let rlead = *rem.coeffs.last().unwrap();
            if rlead % dlead != 0 {
                return None;
            }
            let t = LaurentPoly::monomial_in(var, rlead / dlead, rtop - dtop);
            rem = &rem - &(&t * d);
            quot += t;
        }
        Some(quot)
    }

    /// Substitute `x ↦ x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        LaurentPoly::from_terms(self.var, self.terms().map(|(e, c)| (e * k, c)))
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_poly(text)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "{}", self.var)?,
                (1, c) => write!(f, "{c}*{}", self.var)?,
                (e, 1) => write!(f, "{}^{e}", self.var)?,
                (e, c) => write!(f, "{c}*{}^{e}", self.var)?,
            }
        }
        Ok(())
    }
}

impl Ord for LaurentPoly {
    /// Arbitrary but total: by lowest exponent, then coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, &self.coeffs)
            .cmp(&(other.lo, &other.coeffs))
            .then_with(|| {
                if self.is_constant() {
                    Ordering::Equal
                } else {
                    self.var.cmp(&other.var)
                }
            })
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let var = self.join_var(rhs);
        if self.is_zero() {
            return rhs.clone().with_var(var);
        }
        if rhs.is_zero() {
            return self.clone().with_var(var);
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lo - lo) as usize + k] += c;
        }
        LaurentPoly { var, lo, coeffs }.trimmed()
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let var = self.join_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero().with_var(var);
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            var,
            lo: self.lo + rhs.lo,
            coeffs,
        }
        .trimmed()
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = &*self + &rhs;
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Parse sums of terms like `3`, `-A^2`, `2*A^-3`, `A`, `-1*A^2 + A^-2`,
/// `A^2 - 4`. Any single ASCII letter works as the variable.
fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let read_int = |i: &mut usize| -> Option<i64> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if *i == start {
            return None;
        }
        text[start..*i].parse().ok()
    };
    let mut var: Option<char> = None;
    let mut terms: Vec<(i32, i64)> = Vec::new();
    let mut first = true;
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(err(0, "empty polynomial"));
    }
    while i < bytes.len() {
        // sign (binary operator between terms, or unary on the first)
        let mut neg = false;
        let mut saw_op = false;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                neg = !neg;
            }
            saw_op = true;
            i += 1;
            skip_ws(&mut i);
        }
        if !first && !saw_op {
            return Err(err(i, "expected + or - between terms"));
        }
        first = false;
        let start = i;
        let coef = read_int(&mut i);
        skip_ws(&mut i);
        let mut exp = 0i32;
        let mut has_var = false;
        if i < bytes.len() && bytes[i] == b'*' {
            if coef.is_none() {
                return Err(err(i, "'*' without a coefficient"));
            }
            i += 1;
            skip_ws(&mut i);
            if i >= bytes.len() || !bytes[i].is_ascii_alphabetic() {
                return Err(err(i, "expected variable after '*'"));
            }
        }
        if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
            let v = bytes[i] as char;
            if var.is_some_and(|x| x != v) {
                return Err(err(i, "polynomial mixes variables"));
            }
            var = Some(v);
            has_var = true;
            exp = 1;
            i += 1;
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                skip_ws(&mut i);
                let mut eneg = false;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    eneg = bytes[i] == b'-';
                    i += 1;
                }
                let e = read_int(&mut i).ok_or_else(|| err(i, "expected exponent"))?;
                let e = i32::try_from(e).map_err(|_| err(i, "exponent too large"))?;
                exp = if eneg { -e } else { e };
            }
        }
        if coef.is_none() && !has_var {
            return Err(err(start, "expected a term"));
        }
        let c = coef.unwrap_or(1);
        terms.push((exp, if neg { -c } else { c }));
        skip_ws(&mut i);
    }
    Ok(LaurentPoly::from_terms(
        var.unwrap_or(LaurentPoly::DEFAULT_VAR),
        terms,
    ))
}
