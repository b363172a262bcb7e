//! Extension fields `F_{p^r}`, the field trace, and lookup tables for the
//! multiplicative group.

use super::fp::{poly, FpElem};
use super::prime::{is_prime, prime_factors};
use super::AlgError;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// The field `F_p[X]/(f)` for a monic irreducible `f` of degree `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    p: u32,
    r: u32,
    /// Coefficients of the modulus, lowest degree first, length `r + 1`.
    modulus: Vec<u32>,
}

impl ExtField {
    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Field size `p^r`.
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.r)
    }

    /// Coefficients of the defining modulus, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

/// Irreducibility test: `gcd(X^{p^i} − X, f) = 1` for `0 < i < r` and
/// `X^{p^r} ≡ X (mod f)`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = poly::trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let r = f.len() - 1;
    let x = vec![0, 1];
    let mut xp = x.clone();
    for i in 1..=r {
        xp = poly::powmod(&xp, p as u128, &f, p);
        let diff = poly::sub(&xp, &x, p);
        if i < r {
            let g = poly::gcd(&diff, &f, p);
            if g.len() != 1 {
                return false;
            }
        } else if !poly::rem(&diff, &f, p).is_empty() {
            return false;
        }
    }
    true
}

/// Process-wide memo keyed by `(p, r)`.
type Memo<T> = Mutex<HashMap<(u32, u32), Arc<T>>>;

fn field_cache() -> &'static Memo<ExtField> {
    static CACHE: OnceLock<Memo<ExtField>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The deterministic model of `F_{p^r}`: the modulus is the smallest monic
/// irreducible polynomial of degree `r`, comparing the non-leading
/// coefficients from `X^{r−1}` down to the constant term.
pub fn ext_field(p: u32, r: u32) -> Result<Arc<ExtField>, AlgError> {
    if !is_prime(p as u64) {
        return Err(AlgError::NonPrime(p as u64));
    }
    if r == 0 {
        return Err(AlgError::ZeroDegree);
    }
    if let Some(f) = field_cache().lock().expect("field cache").get(&(p, r)) {
        return Ok(f.clone());
    }
    let count = (p as u64).pow(r);
    let mut found = None;
    for n in 0..count {
        let mut coeffs = digits(n, p, r as usize);
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            found = Some(coeffs);
            break;
        }
    }
    let modulus = found.expect("irreducible polynomials exist in every degree");
    let field = Arc::new(ExtField { p, r, modulus });
    field_cache()
        .lock()
        .expect("field cache")
        .insert((p, r), field.clone());
    Ok(field)
}

fn digits(mut n: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((n % p as u64) as u32);
        n /= p as u64;
    }
    out
}

/// An element of an [`ExtField`], as `r` coefficients in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    field: Arc<ExtField>,
    coeffs: Vec<u32>,
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtElem{:?} in F_{}^{}",
            self.coeffs, self.field.p, self.field.r
        )
    }
}

impl ExtElem {
    /// Element with the given power-basis coefficients (reduced mod `p`).
    pub fn new(field: &Arc<ExtField>, coeffs: &[i64]) -> Self {
        let p = field.p as i64;
        let mut c: Vec<u32> = coeffs.iter().map(|&v| v.rem_euclid(p) as u32).collect();
        let r = field.r as usize;
        if c.len() > r {
            c = poly::rem(&c, &field.modulus, field.p);
        }
        c.resize(r, 0);
        Self {
            field: field.clone(),
            coeffs: c,
        }
    }

    /// The image of an integer.
    pub fn from_int(field: &Arc<ExtField>, v: i64) -> Self {
        Self::new(field, &[v])
    }

    /// The class of `X`.
    pub fn generator_x(field: &Arc<ExtField>) -> Self {
        Self::new(field, &[0, 1])
    }

    /// Decodes the integer `Σ c_i p^i`.
    pub fn decode(field: &Arc<ExtField>, n: u32) -> Self {
        Self {
            field: field.clone(),
            coeffs: digits(n as u64, field.p, field.r as usize),
        }
    }

    /// Encodes as `Σ c_i p^i`.
    pub fn encode(&self) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.field.p as u64 + c as u64) as u32
    }

    /// Owning field.
    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// Power-basis coefficients.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `self^e`.
    pub fn pow(&self, e: u128) -> Self {
        let c = poly::powmod(&self.coeffs, e, &self.field.modulus, self.field.p);
        self.with_coeffs(c)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(self.field.q() as u128 - 2))
    }

    /// The Frobenius `x ↦ x^p`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.field.p as u128)
    }

    fn with_coeffs(&self, mut c: Vec<u32>) -> Self {
        c.resize(self.field.r as usize, 0);
        Self {
            field: self.field.clone(),
            coeffs: c,
        }
    }
}

impl Add for &ExtElem {
    type Output = ExtElem;
    fn add(self, o: &ExtElem) -> ExtElem {
        let p = self.field.p;
        let c = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        ExtElem {
            field: self.field.clone(),
            coeffs: c,
        }
    }
}

impl Sub for &ExtElem {
    type Output = ExtElem;
    fn sub(self, o: &ExtElem) -> ExtElem {
        let p = self.field.p;
        let c = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        ExtElem {
            field: self.field.clone(),
            coeffs: c,
        }
    }
}

impl Mul for &ExtElem {
    type Output = ExtElem;
    fn mul(self, o: &ExtElem) -> ExtElem {
        let c = poly::mulmod(&self.coeffs, &o.coeffs, &self.field.modulus, self.field.p);
        self.with_coeffs(c)
    }
}

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        let p = self.field.p;
        let c = self.coeffs.iter().map(|a| (p - a) % p).collect();
        ExtElem {
            field: self.field.clone(),
            coeffs: c,
        }
    }
}

/// The field trace `Tr(x) = x + x^p + … + x^{p^{r−1}}`.
pub fn trace(x: &ExtElem) -> FpElem {
    let mut acc = x.clone();
    let mut pw = x.clone();
    for _ in 1..x.field.r {
        pw = pw.frobenius();
        acc = &acc + &pw;
    }
    debug_assert!(
        acc.coeffs[1..].iter().all(|&c| c == 0),
        "trace lies in the prime field"
    );
    FpElem::reduce(acc.coeffs[0] as i64, x.field.p)
}

/// Lookup tables for `F_q`: discrete logarithms with respect to the
/// smallest generator, exponentials, and the trace of every element.
/// Elements are addressed by their [`ExtElem::encode`] value.
#[derive(Debug)]
pub struct FqContext {
    field: Arc<ExtField>,
    q: u32,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

/// Marker stored in the log table for the zero element.
pub const NO_LOG: u32 = u32::MAX;

fn context_cache() -> &'static Memo<FqContext> {
    static CACHE: OnceLock<Memo<FqContext>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Largest field size the lookup tables are built for.
pub const MAX_TABLE_Q: u64 = 1 << 22;

/// Shared lookup tables for `F_{p^r}` (built once per process).
pub fn fq_context(p: u32, r: u32) -> Result<Arc<FqContext>, AlgError> {
    if let Some(c) = context_cache().lock().expect("context cache").get(&(p, r)) {
        return Ok(c.clone());
    }
    let field = ext_field(p, r)?;
    if field.q() > MAX_TABLE_Q {
        return Err(AlgError::FieldTooLarge(field.q()));
    }
    let ctx = Arc::new(FqContext::build(field));
    context_cache()
        .lock()
        .expect("context cache")
        .insert((p, r), ctx.clone());
    Ok(ctx)
}

impl FqContext {
    fn build(field: Arc<ExtField>) -> Self {
        let q = field.q() as u32;
        let order = (q - 1) as u128;
        let factors = prime_factors(q as u64 - 1);
        let one = ExtElem::from_int(&field, 1);
        let generator = (1..q)
            .map(|n| ExtElem::decode(&field, n))
            .find(|g| factors.iter().all(|&l| g.pow(order / l as u128) != one))
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = one.clone();
        for i in 0..q - 1 {
            let enc = cur.encode();
            exp.push(enc);
            log[enc as usize] = i;
            cur = &cur * &generator;
        }
        debug_assert_eq!(cur, one);
        let basis_traces: Vec<u32> = (0..field.r)
            .map(|i| {
                let mut c = vec![0i64; i as usize + 1];
                c[i as usize] = 1;
                trace(&ExtElem::new(&field, &c)).value()
            })
            .collect();
        let p = field.p;
        let trace_tab = (0..q)
            .map(|n| {
                let d = digits(n as u64, p, field.r as usize);
                (d.iter()
                    .zip(&basis_traces)
                    .map(|(&c, &t)| c as u64 * t as u64)
                    .sum::<u64>()
                    % p as u64) as u32
            })
            .collect();
        Self {
            generator: generator.encode(),
            field,
            q,
            exp,
            log,
            trace: trace_tab,
        }
    }

    /// The field.
    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.field.p
    }

    /// Degree over `F_p`.
    pub fn r(&self) -> u32 {
        self.field.r
    }

    /// Field size.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Encoding of the smallest generator of `F_q^×`.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Encoding of `g^i`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm of a nonzero encoded element.
    pub fn log(&self, enc: u32) -> Option<u32> {
        let l = self.log[enc as usize];
        (l != NO_LOG).then_some(l)
    }

    /// Trace to `F_p` of an encoded element.
    pub fn trace_of(&self, enc: u32) -> u32 {
        self.trace[enc as usize]
    }

    /// Trace of `g^i`.
    pub fn trace_of_power(&self, i: u64) -> u32 {
        self.trace[self.exp(i) as usize]
    }

    /// Sum of two encoded elements.
    pub fn add_enc(&self, a: u32, b: u32) -> u32 {
        let p = self.field.p;
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.field.r {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    /// Product of two encoded elements.
    pub fn mul_enc(&self, a: u32, b: u32) -> u32 {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.exp(x as u64 + y as u64),
            _ => 0,
        }
    }

    /// Map from encodings of `small` to encodings of `self`, realizing the
    /// unique field embedding determined by sending `X` to the smallest root
    /// (in discrete-log order) of the small modulus.
    pub fn embedding_from(&self, small: &FqContext) -> Result<Vec<u32>, AlgError> {
        if small.p() != self.p() || !self.r().is_multiple_of(small.r()) {
            return Err(AlgError::NoEmbedding {
                small: (small.p(), small.r()),
                big: (self.p(), self.r()),
            });
        }
        let m = small.field.modulus();
        let eval = |x: u32| -> u32 {
            let mut acc = 0u32;
            for &c in m.iter().rev() {
                acc = self.add_enc(self.mul_enc(acc, x), c);
            }
            acc
        };
        let step = (self.q as u64 - 1) / (small.q as u64 - 1);
        let root = std::iter::once(0u32)
            .chain((0..small.q as u64 - 1).map(|i| self.exp(i * step)))
            .find(|&x| eval(x) == 0)
            .expect("an irreducible polynomial splits in every extension of its degree");
        let r = small.r() as usize;
        let mut powers = Vec::with_capacity(r);
        let mut cur = 1u32;
        for _ in 0..r {
            powers.push(cur);
            cur = self.mul_enc(cur, root);
        }
        Ok((0..small.q)
            .map(|n| {
                let d = digits(n as u64, small.p(), r);
                d.iter().zip(&powers).fold(0, |acc, (&c, &pw)| {
                    let term = self.mul_enc(c, pw);
                    self.add_enc(acc, term)
                })
            })
            .collect())
    }
}
