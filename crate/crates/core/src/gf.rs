//! Arithmetic in prime fields GF(p) and extension fields GF(p^m).
//!
//! Elements are encoded as integers `0..q-1`: the code of an element with
//! polynomial-basis coordinates `(c_0, ..., c_{m-1})` is `sum c_i * p^i`.
//! Extension fields are built from an explicit modulus polynomial (ascending
//! coefficients, monic) that is checked for irreducibility by trial division.

use std::fmt;
use std::sync::Arc;

/// Largest supported field order. Everything in this crate is desk scale;
/// keeping `q` within 16 bits keeps element codes in native integers.
pub const MAX_ORDER: u64 = 1 << 16;

/// Orders with a built-in default modulus polynomial.
const DEFAULT_MODULI: &[(u64, u32, &[u16])] = &[
    (2, 2, &[1, 1, 1]),    // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]), // x^3 + x + 1
    (3, 2, &[1, 0, 1]),    // x^2 + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (3, 3, &[1, 2, 0, 1]), // x^3 + 2x + 1
];

/// Fields with order up to this bound carry full multiplication/inverse
/// lookup tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NonPrimeCharacteristic(u64),
    InvalidDegree(u32),
    OrderTooLarge { p: u64, m: u32 },
    MissingModulus { p: u64, m: u32 },
    WrongModulusDegree { expected: u32, got: usize },
    NotMonic,
    CoefficientOutOfRange(u16),
    ReducibleModulus,
    InvalidElementCode { code: u64, order: u64 },
    DivisionByZero,
    BadSpec(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrimeCharacteristic(p) => write!(f, "{p} is not prime"),
            FieldError::InvalidDegree(m) => write!(f, "extension degree {m} is not >= 1"),
            FieldError::OrderTooLarge { p, m } => {
                write!(f, "order {p}^{m} exceeds the supported bound {MAX_ORDER}")
            }
            FieldError::MissingModulus { p, m } => {
                write!(f, "GF({p}^{m}) needs a modulus polynomial (no built-in default)")
            }
            FieldError::WrongModulusDegree { expected, got } => write!(
                f,
                "modulus must list {} coefficients (degree {expected}), got {got}",
                expected + 1
            ),
            FieldError::NotMonic => write!(f, "modulus polynomial must be monic"),
            FieldError::CoefficientOutOfRange(c) => {
                write!(f, "modulus coefficient {c} is not a residue mod p")
            }
            FieldError::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            FieldError::InvalidElementCode { code, order } => {
                write!(f, "element code {code} out of range for field of order {order}")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::BadSpec(s) => write!(f, "malformed field spec `{s}`"),
        }
    }
}

impl std::error::Error for FieldError {}

/// An element of a finite field, stored as its integer code in `0..q-1`.
///
/// The code is the base-p evaluation of the polynomial-basis coordinates, so
/// for prime fields it is the residue itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldRepr {
    p: u64,
    m: u32,
    q: u64,
    /// Modulus coefficients, ascending degree, length m+1, monic. For prime
    /// fields this is `[0, 1]` (the polynomial x), which is never used.
    modulus: Vec<u16>,
    mul_table: Option<Vec<u16>>,
    inv_table: Option<Vec<u16>>,
}

/// A finite field GF(p^m). Cheap to clone; all operations are pure.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.m.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec_string())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds GF(p^m). `modulus` lists the m+1 coefficients of a monic
    /// irreducible polynomial in ascending degree; it may be omitted for
    /// prime fields and for the handful of orders with a built-in default.
    pub fn new(p: u64, m: u32, modulus: Option<&[u16]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if m < 1 {
            return Err(FieldError::InvalidDegree(m));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.checked_mul(p).ok_or(FieldError::OrderTooLarge { p, m })?;
            if q > MAX_ORDER {
                return Err(FieldError::OrderTooLarge { p, m });
            }
        }
        let modulus: Vec<u16> = if m == 1 {
            // Unused for prime fields; store x for completeness.
            vec![0, 1]
        } else {
            let coeffs = match modulus {
                Some(c) => c.to_vec(),
                None => DEFAULT_MODULI
                    .iter()
                    .find(|(dp, dm, _)| *dp == p && *dm == m)
                    .map(|(_, _, c)| c.to_vec())
                    .ok_or(FieldError::MissingModulus { p, m })?,
            };
            if coeffs.len() != m as usize + 1 {
                return Err(FieldError::WrongModulusDegree {
                    expected: m,
                    got: coeffs.len().saturating_sub(1),
                });
            }
            for &c in &coeffs {
                if u64::from(c) >= p {
                    return Err(FieldError::CoefficientOutOfRange(c));
                }
            }
            if coeffs[m as usize] != 1 {
                return Err(FieldError::NotMonic);
            }
            if !poly_is_irreducible(&coeffs, p) {
                return Err(FieldError::ReducibleModulus);
            }
            coeffs
        };
        let mut repr = FieldRepr { p, m, q, modulus, mul_table: None, inv_table: None };
        if q <= TABLE_LIMIT {
            let qs = q as usize;
            let mut mul = vec![0u16; qs * qs];
            for a in 0..qs {
                for b in a..qs {
                    let prod = raw_mul(&repr, a as u16, b as u16);
                    mul[a * qs + b] = prod;
                    mul[b * qs + a] = prod;
                }
            }
            let mut inv = vec![0u16; qs];
            for a in 1..qs {
                inv[a] = raw_inv(&repr, a as u16);
            }
            repr.mul_table = Some(mul);
            repr.inv_table = Some(inv);
        }
        Ok(Field(Arc::new(repr)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients in ascending degree (length m+1).
    pub fn modulus(&self) -> &[u16] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Validates an integer code and wraps it as an element.
    pub fn element(&self, code: u64) -> Result<FieldElement, FieldError> {
        if code < self.0.q {
            Ok(FieldElement(code as u16))
        } else {
            Err(FieldError::InvalidElementCode { code, order: self.0.q })
        }
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(|c| FieldElement(c as u16))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.0.m == 1 {
            FieldElement(((u64::from(a.0) + u64::from(b.0)) % self.0.p) as u16)
        } else {
            let p = self.0.p;
            let mut out = 0u64;
            let mut scale = 1u64;
            let (mut x, mut y) = (u64::from(a.0), u64::from(b.0));
            for _ in 0..self.0.m {
                out += ((x % p + y % p) % p) * scale;
                x /= p;
                y /= p;
                scale *= p;
            }
            FieldElement(out as u16)
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.0.m == 1 {
            if a.0 == 0 {
                a
            } else {
                FieldElement((self.0.p - u64::from(a.0)) as u16)
            }
        } else {
            let p = self.0.p;
            let mut out = 0u64;
            let mut scale = 1u64;
            let mut x = u64::from(a.0);
            for _ in 0..self.0.m {
                let d = x % p;
                out += (if d == 0 { 0 } else { p - d }) * scale;
                x /= p;
                scale *= p;
            }
            FieldElement(out as u16)
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Some(table) = &self.0.mul_table {
            let q = self.0.q as usize;
            FieldElement(table[a.0 as usize * q + b.0 as usize])
        } else {
            FieldElement(raw_mul(&self.0, a.0, b.0))
        }
    }

    /// Multiplicative inverse; the defining property is `a * inv(a) = 1`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(table) = &self.0.inv_table {
            Ok(FieldElement(table[a.0 as usize]))
        } else {
            Ok(FieldElement(raw_inv(&self.0, a.0)))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Field spec string used by files and the CLI: `p` for prime fields,
    /// `p^m:c0,c1,...,cm` for extensions (coefficients ascending degree).
    pub fn spec_string(&self) -> String {
        if self.0.m == 1 {
            format!("{}", self.0.p)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            format!("{}^{}:{}", self.0.p, self.0.m, coeffs.join(","))
        }
    }

    /// Parses a field spec string (the inverse of [`Field::spec_string`]).
    pub fn parse_spec(spec: &str) -> Result<Field, FieldError> {
        let spec = spec.trim();
        let bad = || FieldError::BadSpec(spec.to_string());
        if spec.is_empty() {
            return Err(bad());
        }
        match spec.split_once('^') {
            None => {
                let p: u64 = spec.parse().map_err(|_| bad())?;
                Field::prime(p)
            }
            Some((p_str, rest)) => {
                let p: u64 = p_str.parse().map_err(|_| bad())?;
                let (m_str, coeff_str) = rest.split_once(':').ok_or_else(bad)?;
                let m: u32 = m_str.parse().map_err(|_| bad())?;
                let coeffs: Vec<u16> = coeff_str
                    .split(',')
                    .map(|c| c.trim().parse::<u16>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?;
                Field::new(p, m, Some(&coeffs))
            }
        }
    }
}

/// Polynomial-basis coordinates of a code (ascending degree, length m).
fn code_to_poly(repr: &FieldRepr, code: u16) -> Vec<u64> {
    let p = repr.p;
    let mut x = u64::from(code);
    let mut out = Vec::with_capacity(repr.m as usize);
    for _ in 0..repr.m {
        out.push(x % p);
        x /= p;
    }
    out
}

fn poly_to_code(repr: &FieldRepr, poly: &[u64]) -> u16 {
    let mut out = 0u64;
    for &c in poly.iter().rev() {
        out = out * repr.p + c;
    }
    out as u16
}

fn raw_mul(repr: &FieldRepr, a: u16, b: u16) -> u16 {
    if repr.m == 1 {
        return ((u64::from(a) * u64::from(b)) % repr.p) as u16;
    }
    let p = repr.p;
    let m = repr.m as usize;
    let pa = code_to_poly(repr, a);
    let pb = code_to_poly(repr, b);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &ca) in pa.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in pb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    // Reduce by the monic modulus, highest degree first.
    for d in (m..2 * m - 1).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &mc) in repr.modulus.iter().enumerate().take(m) {
            let idx = d - m + i;
            prod[idx] = (prod[idx] + c * (p - u64::from(mc) % p) % p) % p;
        }
    }
    poly_to_code(repr, &prod[..m])
}

/// Inverse by Fermat: a^(q-2). The test suite cross-checks this against an
/// extended-Euclid oracle.
fn raw_inv(repr: &FieldRepr, a: u16) -> u16 {
    debug_assert!(a != 0);
    let mut e = repr.q - 2;
    let mut base = a;
    let mut acc = 1u16;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(repr, acc, base);
        }
        base = raw_mul(repr, base, base);
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p) by exhaustive trial division with all monic
/// polynomials of degree 1..=deg/2. Degrees here are tiny, so the naive
/// route is fine.
fn poly_is_irreducible(coeffs: &[u16], p: u64) -> bool {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let poly: Vec<u64> = coeffs.iter().map(|&c| u64::from(c)).collect();
    for d in 1..=deg / 2 {
        // All monic divisor candidates of degree d, low coefficients counted
        // in base p.
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                div.push(x % p);
                x /= p;
            }
            div.push(1);
            if poly_rem_is_zero(&poly, &div, p) {
                return false;
            }
        }
    }
    true
}

/// True iff `divisor` (monic) divides `poly` over GF(p).
fn poly_rem_is_zero(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem = poly.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for i in 0..=dd {
                let idx = shift + i;
                rem[idx] = (rem[idx] + lead * (p - divisor[i] % p) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}
