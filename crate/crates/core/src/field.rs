//! Exact arithmetic in a prime field `F_q` and its degree-`m` extension `F_{q^m}`.
//!
//! Extension elements are stored as packed base-`q` integers: the residue class
//! polynomial `c_0 + c_1 z + ... + c_{m-1} z^{m-1}` is held as
//! `c_0 + c_1 q + ... + c_{m-1} q^{m-1}`. All arithmetic lives on the owning
//! [`FieldCtx`]; elements are plain `Copy` values tagged with the id of the
//! context that produced them.
//!
//! Multiplication uses log/antilog tables when the field has at most 2^16
//! elements, a carry-less product for `q = 2`, and schoolbook multiplication
//! otherwise. The Frobenius map is applied through precomputed images of the
//! polynomial basis, since it is `F_q`-linear.

use std::cell::Cell;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::matrix::{self, Matrix};

/// Arithmetic over a field whose elements need the field object to be combined.
///
/// Linear algebra in [`crate::matrix`] is written against this trait and serves
/// both `F_q` ([`PrimeField`]) and `F_{q^m}` ([`FieldCtx`]).
pub trait Field {
    type Elem: Copy + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_q`, elements are residues in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a as u64 % self.q as u64;
        let mut acc = 1u64 % self.q as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.q as u64;
            }
            base = base * base % self.q as u64;
            e >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.q) {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }
}

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Number of `F_{q^m}` multiplications and inversions performed on this thread.
pub fn mul_count() -> u64 {
    MUL_COUNT.with(|c| c.get())
}

pub fn reset_mul_count() {
    MUL_COUNT.with(|c| c.set(0));
}

/// Runs `f` and returns its result with the number of `F_{q^m}`
/// multiplications it performed on the current thread.
pub fn count_muls<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = mul_count();
    let out = f();
    (out, mul_count() - before)
}

#[inline]
fn bump() {
    MUL_COUNT.with(|c| c.set(c.get() + 1));
}

static NEXT_CTX_ID: AtomicU32 = AtomicU32::new(1);

/// An element of `F_{q^m}`.
///
/// Equality compares the owning context as well as the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    ctx: u32,
    value: u64,
}

impl FieldElement {
    /// Packed base-`q` representation of the coordinates.
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn ctx_id(self) -> u32 {
        self.ctx
    }
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

const TABLE_LIMIT: u64 = 1 << 16;

/// The extension field `F_{q^m} = F_q[z] / (modulus)`.
pub struct FieldCtx {
    id: u32,
    base: PrimeField,
    m: usize,
    modulus: Vec<u32>,
    order: u64,
    tables: Option<LogTables>,
    /// `frob[i][j]` is the packed value of `(z^j)^(q^i)`.
    frob: Vec<Vec<u64>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("q", &self.q())
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldCtx {
    /// Builds `F_{q^m}` from a monic irreducible `modulus` of degree `m`
    /// (coefficients ascending).
    pub fn new(q: u32, m: usize, modulus: Vec<u32>) -> Result<Arc<Self>> {
        let base = PrimeField::new(q)?;
        if m == 0 {
            return invalid("extension degree must be at least 1");
        }
        let order = (q as u64)
            .checked_pow(m as u32)
            .filter(|&o| o < (1u64 << 63))
            .ok_or(Error::FieldTooLarge { q, m })?;
        if modulus.len() != m + 1 || modulus[m] != 1 || modulus.iter().any(|&c| c >= q) {
            return Err(Error::NotIrreducible(m));
        }
        if !fq_poly::is_irreducible(&modulus, base) {
            return Err(Error::NotIrreducible(m));
        }
        Ok(Arc::new(Self::build(base, m, modulus, order)))
    }

    /// Builds `F_{q^m}` with the first irreducible modulus `z^m + c(z)` found
    /// when enumerating `c` in increasing packed order. For `q = 2` this gives
    /// `z^4 + z + 1` and `z^6 + z + 1` for `m = 4, 6`.
    pub fn with_default_modulus(q: u32, m: usize) -> Result<Arc<Self>> {
        let base = PrimeField::new(q)?;
        if m == 0 {
            return invalid("extension degree must be at least 1");
        }
        let order = (q as u64)
            .checked_pow(m as u32)
            .filter(|&o| o < (1u64 << 63))
            .ok_or(Error::FieldTooLarge { q, m })?;
        let start = if m == 1 { 0 } else { 1 };
        for lower in start..order {
            let mut modulus = unpack(lower, q, m);
            modulus.push(1);
            if m > 1 && modulus[0] == 0 {
                continue;
            }
            if fq_poly::is_irreducible(&modulus, base) {
                return Ok(Arc::new(Self::build(base, m, modulus, order)));
            }
        }
        Err(Error::NotIrreducible(m))
    }

    fn build(base: PrimeField, m: usize, modulus: Vec<u32>, order: u64) -> Self {
        let mut ctx = Self {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            base,
            m,
            modulus,
            order,
            tables: None,
            frob: Vec::new(),
        };
        if order <= TABLE_LIMIT && order > 2 {
            ctx.tables = Some(ctx.build_tables());
        }
        ctx.frob = ctx.build_frobenius();
        ctx
    }

    fn build_tables(&self) -> LogTables {
        let n = self.order - 1;
        let prime_factors = factor(n);
        let generator = (2..self.order)
            .find(|&g| prime_factors.iter().all(|&p| self.pow_slow(g, n / p) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * n as usize);
        let mut log = vec![0u32; self.order as usize];
        let mut acc = 1u64;
        for i in 0..n {
            exp.push(acc);
            log[acc as usize] = i as u32;
            acc = self.mul_slow(acc, generator);
        }
        let head = exp.clone();
        exp.extend(head);
        LogTables { exp, log }
    }

    fn build_frobenius(&self) -> Vec<Vec<u64>> {
        let q = self.q() as u64;
        let identity: Vec<u64> = (0..self.m).map(|j| q.pow(j as u32)).collect();
        let first: Vec<u64> = identity.iter().map(|&b| self.pow_raw(b, q)).collect();
        let mut frob = vec![identity];
        for i in 1..self.m {
            let row = if i == 1 {
                first.clone()
            } else {
                frob[i - 1].iter().map(|&v| self.apply_linear(&first, v)).collect()
            };
            frob.push(row);
        }
        frob
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn q(&self) -> u32 {
        self.base.q()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of elements, `q^m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        self.base
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.ctx == self.id
    }

    pub fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    #[inline]
    fn wrap(&self, value: u64) -> FieldElement {
        FieldElement { ctx: self.id, value }
    }

    #[inline]
    fn unwrap(&self, a: FieldElement) -> u64 {
        assert_eq!(a.ctx, self.id, "field element used with a foreign context");
        a.value
    }

    /// Element with packed value `value`.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.order {
            return invalid(format!("packed value {value} out of range for order {}", self.order));
        }
        Ok(self.wrap(value))
    }

    /// The generator `z` of the polynomial basis.
    pub fn z(&self) -> FieldElement {
        if self.m == 1 {
            // F_q[z]/(z - c): z is the constant c
            return self.wrap(self.base.neg(self.modulus[0]) as u64);
        }
        self.wrap(self.q() as u64)
    }

    /// The image of a residue of `F_q` in `F_{q^m}`.
    pub fn from_fq(&self, c: u32) -> FieldElement {
        self.wrap((c % self.q()) as u64)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() != self.m {
            return invalid(format!("expected {} coordinates, got {}", self.m, coords.len()));
        }
        if coords.iter().any(|&c| c >= self.q()) {
            return invalid(format!("coordinate out of range for q = {}", self.q()));
        }
        Ok(self.wrap(pack(coords, self.q())))
    }

    /// Coordinates with respect to `{1, z, ..., z^{m-1}}`.
    pub fn expand(&self, a: FieldElement) -> Vec<u32> {
        unpack(self.unwrap(a), self.q(), self.m)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.wrap(rng.gen_range(0..self.order))
    }

    /// Every element, in increasing packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |v| self.wrap(v))
    }

    /// `a^(q^i)`; `i` is reduced modulo `m`, so negative `i` gives the inverse map.
    pub fn frobenius(&self, a: FieldElement, i: i64) -> FieldElement {
        let v = self.unwrap(a);
        let i = i.rem_euclid(self.m as i64) as usize;
        if i == 0 {
            return a;
        }
        self.wrap(self.apply_linear(&self.frob[i], v))
    }

    /// Multiplication by a scalar from `F_q`.
    pub fn scale_fq(&self, c: u32, a: FieldElement) -> FieldElement {
        self.wrap(self.scale_raw(c % self.q(), self.unwrap(a)))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        self.wrap(self.pow_raw(self.unwrap(a), e))
    }

    /// Rank over `F_q` of the `m x n` matrix whose columns are the coordinates
    /// of `elements`.
    pub fn rank_over_fq(&self, elements: &[FieldElement]) -> Result<usize> {
        for &e in elements {
            self.check(e)?;
        }
        Ok(matrix::rank(&self.base, &self.coordinate_matrix(elements)))
    }

    /// The `m x n` coordinate matrix over `F_q`, one column per element.
    pub fn coordinate_matrix(&self, elements: &[FieldElement]) -> Matrix<u32> {
        let cols: Vec<Vec<u32>> = elements.iter().map(|&e| self.expand(e)).collect();
        Matrix::from_fn(self.m, elements.len(), |r, c| cols[c][r])
    }

    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_neg(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    pub fn try_inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.inv(a).ok_or(Error::DivisionByZero)
    }

    /// `a / b`.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let inv = self.try_inv(b)?;
        self.check(a)?;
        Ok(self.mul(a, inv))
    }

    /// Little-endian coordinate string `c0,c1,...,c_{m-1}`.
    pub fn format_element(&self, a: FieldElement) -> String {
        self.expand(a)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        self.from_coords(&coords).map_err(|e| Error::Parse(e.to_string()))
    }

    // ---- packed arithmetic ----

    fn add_raw(&self, a: u64, b: u64) -> u64 {
        let q = self.q() as u64;
        if q == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u64, 1u64);
        for _ in 0..self.m {
            out += ((a % q + b % q) % q) * place;
            a /= q;
            b /= q;
            place = place.wrapping_mul(q);
        }
        out
    }

    fn neg_raw(&self, a: u64) -> u64 {
        let q = self.q() as u64;
        if q == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0u64, 1u64);
        for _ in 0..self.m {
            out += ((q - a % q) % q) * place;
            a /= q;
            place = place.wrapping_mul(q);
        }
        out
    }

    fn scale_raw(&self, c: u32, a: u64) -> u64 {
        let q = self.q() as u64;
        match c {
            0 => 0,
            1 => a,
            _ => {
                let (mut a, mut out, mut place) = (a, 0u64, 1u64);
                for _ in 0..self.m {
                    out += (a % q * c as u64 % q) * place;
                    a /= q;
                    place = place.wrapping_mul(q);
                }
                out
            }
        }
    }

    /// Applies the `F_q`-linear map given by the images of the basis vectors.
    fn apply_linear(&self, images: &[u64], v: u64) -> u64 {
        let q = self.q() as u64;
        let mut acc = 0u64;
        if q == 2 {
            let mut bits = v;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                acc ^= images[j];
                bits &= bits - 1;
            }
            return acc;
        }
        let mut v = v;
        for &img in images.iter().take(self.m) {
            let digit = (v % q) as u32;
            if digit != 0 {
                acc = self.add_raw(acc, self.scale_raw(digit, img));
            }
            v /= q;
        }
        acc
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            return t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let m = self.m;
        if self.q() == 2 {
            let mut prod: u128 = 0;
            let mut bits = b;
            while bits != 0 {
                let j = bits.trailing_zeros();
                prod ^= (a as u128) << j;
                bits &= bits - 1;
            }
            let mut red: u128 = 0;
            for (i, &c) in self.modulus.iter().enumerate().take(m) {
                if c == 1 {
                    red |= 1 << i;
                }
            }
            for k in (m..2 * m).rev() {
                if prod >> k & 1 == 1 {
                    prod ^= 1u128 << k;
                    prod ^= red << (k - m);
                }
            }
            return prod as u64;
        }
        let fq = self.base;
        let da = unpack(a, fq.q(), m);
        let db = unpack(b, fq.q(), m);
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = fq.add(prod[i + j], fq.mul(x, y));
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..=m {
                prod[k - m + i] = fq.sub(prod[k - m + i], fq.mul(c, self.modulus[i]));
            }
        }
        prod.truncate(m);
        pack(&prod, fq.q())
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn pow_raw(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Field for FieldCtx {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.add_raw(self.unwrap(a), self.unwrap(b)))
    }

    fn neg(&self, a: FieldElement) -> FieldElement {
        self.wrap(self.neg_raw(self.unwrap(a)))
    }

    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        bump();
        self.wrap(self.mul_raw(self.unwrap(a), self.unwrap(b)))
    }

    fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        let v = self.unwrap(a);
        if v == 0 {
            return None;
        }
        bump();
        if let Some(t) = &self.tables {
            let n = self.order as usize - 1;
            return Some(self.wrap(t.exp[(n - t.log[v as usize] as usize) % n]));
        }
        Some(self.wrap(self.pow_raw(v, self.order - 2)))
    }

    fn is_zero(&self, a: FieldElement) -> bool {
        self.unwrap(a) == 0
    }
}

impl Field for Arc<FieldCtx> {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        (**self).zero()
    }
    fn one(&self) -> FieldElement {
        (**self).one()
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        (**self).add(a, b)
    }
    fn neg(&self, a: FieldElement) -> FieldElement {
        (**self).neg(a)
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        (**self).mul(a, b)
    }
    fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (**self).inv(a)
    }
    fn is_zero(&self, a: FieldElement) -> bool {
        (**self).is_zero(a)
    }
}

fn pack(coords: &[u32], q: u32) -> u64 {
    coords.iter().rev().fold(0u64, |acc, &c| acc * q as u64 + c as u64)
}

fn unpack(mut v: u64, q: u32, m: usize) -> Vec<u32> {
    let q = q as u64;
    (0..m)
        .map(|_| {
            let d = (v % q) as u32;
            v /= q;
            d
        })
        .collect()
}

fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense univariate polynomials over `F_q` (ascending coefficients), only as
/// much as modulus validation needs.
pub(crate) mod fq_poly {
    use super::{Field, PrimeField};

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u32], f: &[u32], fq: PrimeField) -> Vec<u32> {
        let f = trim(f.to_vec());
        let mut a = trim(a.to_vec());
        let df = f.len() - 1;
        let lead_inv = fq.inv(f[df]).expect("nonzero divisor");
        while a.len() > df {
            let da = a.len() - 1;
            let c = fq.mul(a[da], lead_inv);
            for i in 0..=df {
                a[da - df + i] = fq.sub(a[da - df + i], fq.mul(c, f[i]));
            }
            a = trim(a);
        }
        a
    }

    fn mul(a: &[u32], b: &[u32], fq: PrimeField) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = fq.add(out[i + j], fq.mul(x, y));
            }
        }
        trim(out)
    }

    fn gcd(a: &[u32], b: &[u32], fq: PrimeField) -> Vec<u32> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, fq);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or: `f` of degree `m` is irreducible iff
    /// `gcd(x^(q^i) - x, f) = 1` for `1 <= i <= m/2`.
    pub fn is_irreducible(f: &[u32], fq: PrimeField) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let m = f.len() - 1;
        let x = vec![0, 1];
        let mut h = rem(&x, &f, fq);
        for _ in 0..m / 2 {
            // h <- h^q mod f
            let mut acc = vec![1u32];
            let mut base = h.clone();
            let mut e = fq.q();
            while e > 0 {
                if e & 1 == 1 {
                    acc = rem(&mul(&acc, &base, fq), &f, fq);
                }
                base = rem(&mul(&base, &base, fq), &f, fq);
                e >>= 1;
            }
            h = acc;
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = fq.sub(diff[1], 1);
            let g = gcd(&f, &trim(diff), fq);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }

    /// Trial division by every monic polynomial of degree `1..=m/2`.
    #[cfg(test)]
    pub fn is_irreducible_trial(f: &[u32], fq: PrimeField) -> bool {
        let f = trim(f.to_vec());
        let m = f.len() - 1;
        let q = fq.q() as u64;
        for deg in 1..=m / 2 {
            for lower in 0..q.pow(deg as u32) {
                let mut g = super::unpack(lower, fq.q(), deg);
                g.push(1);
                if rem(&f, &g, fq).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
