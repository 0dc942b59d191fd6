//! Arithmetic in binary fields GF(2^m), m ≤ 24.
//!
//! Elements are held in polynomial-basis representation: the bit-packed
//! integer `b` stands for the residue class Σ bitᵢ(b)·xⁱ modulo the field's
//! modulus polynomial. No log tables are kept; multiplication is shift-and-
//! reduce, inversion is a Fermat power, and Frobenius maps are repeated
//! squaring. At desk scale (2^24 elements at most) this is fast enough for
//! everything the crate does, and it keeps every operation exact and
//! allocation-free.
//!
//! # Canonical choices
//!
//! * The **canonical generator** of a context is the smallest-encoding
//!   element of full multiplicative order 2^m − 1, found by ascending scan.
//!   All `g^k` element notation refers to it.
//! * The **canonical embedding root** chosen by [`TowerEmbedding`] is the
//!   smallest-encoding root of the subfield modulus inside the extension.
//! * The built-in [`ModulusTable`] pins the moduli used by the CLI field
//!   shorthands; any other degree up to 24 is filled in by a deterministic
//!   search for the smallest-encoding irreducible polynomial.
//!
//! Elements carry the modulus of their owning context, and every operation
//! asserts that its operands belong to the context it was invoked on;
//! violations panic, since they are programming errors rather than data
//! errors.

use std::collections::HashMap;
use std::fmt;
use std::sync::LazyLock;

use crate::error::{Error, Result};

/// Largest supported extension degree over GF(2).
pub const MAX_DEGREE: u32 = 24;

/// Operations that must walk an entire field refuse when 2^m exceeds this.
pub const ENUM_CAP: u64 = 1 << 20;

// ---------------------------------------------------------------------------
// Plain GF(2)[x] helpers on u64 bit vectors (bit i = coefficient of x^i).
// Degrees stay ≤ 48 in every use below, so u64 words suffice.
// ---------------------------------------------------------------------------

fn gf2_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32 // -1 convention never needed: callers skip 0
}

fn gf2_rem(mut r: u64, p: u64) -> u64 {
    let dp = gf2_degree(p);
    while r != 0 && gf2_degree(r) >= dp {
        r ^= p << (gf2_degree(r) - dp);
    }
    r
}

/// Irreducibility of a GF(2) polynomial by trial division — small, obviously
/// correct, and only ever run on degrees ≤ 24.
fn gf2_irreducible(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let d = gf2_degree(p);
    if d == 0 {
        return false;
    }
    if p & 1 == 0 {
        // divisible by x
        return p == 2;
    }
    // Try every divisor with constant term 1 up to half the degree.
    for dd in 1..=(d / 2) {
        let lo = 1u64 << dd;
        let hi = 1u64 << (dd + 1);
        let mut q = lo | 1;
        while q < hi {
            if gf2_rem(p, q) == 0 {
                return false;
            }
            q += 2;
        }
    }
    true
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

// ---------------------------------------------------------------------------
// Modulus table
// ---------------------------------------------------------------------------

/// Registry of modulus polynomials by extension degree.
///
/// The built-in table ships as a text resource; see
/// `resources/modulus_table.txt` for the pinned entries. Lookups for degrees
/// not present fall back to a deterministic search (smallest-encoding
/// irreducible of that degree), so every degree in `1..=24` resolves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusTable {
    entries: Vec<(u32, u64)>,
}

static BUILTIN_TABLE: LazyLock<ModulusTable> = LazyLock::new(|| {
    ModulusTable::parse(include_str!("../resources/modulus_table.txt"))
        .expect("built-in modulus table must parse")
});

impl ModulusTable {
    /// The built-in table.
    pub fn builtin() -> &'static ModulusTable {
        &BUILTIN_TABLE
    }

    /// Parses the `degree:hex` line format (with `#` comments).
    pub fn parse(text: &str) -> Result<ModulusTable> {
        let mut entries = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.splitn(2, ':');
            let bad = |why: &str| Error::Parse {
                what: "modulus table line",
                input: line.to_string(),
                why: why.to_string(),
            };
            let degree: u32 = parts
                .next()
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| bad("expected `<degree>:<hex>`"))?;
            let bits = parts
                .next()
                .and_then(|s| u64::from_str_radix(s.trim(), 16).ok())
                .ok_or_else(|| bad("expected hex modulus bits after `:`"))?;
            entries.push((degree, bits));
        }
        Ok(ModulusTable { entries })
    }

    /// Returns a copy of the table with one entry replaced or added.
    pub fn with_override(&self, degree: u32, modulus: u64) -> ModulusTable {
        let mut entries: Vec<(u32, u64)> = self
            .entries
            .iter()
            .copied()
            .filter(|&(d, _)| d != degree)
            .collect();
        entries.push((degree, modulus));
        entries.sort_unstable();
        ModulusTable { entries }
    }

    /// Modulus bits for a degree: a registered entry if present, otherwise
    /// the smallest-encoding irreducible polynomial of that degree.
    pub fn modulus_for(&self, degree: u32) -> Result<u64> {
        if degree < 1 || degree > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree });
        }
        if let Some(&(_, bits)) = self.entries.iter().find(|&&(d, _)| d == degree) {
            return Ok(bits);
        }
        // Deterministic search: ascending encodings with the top bit fixed and
        // an odd constant term (even ones are divisible by x).
        let lo = 1u64 << degree;
        let hi = 1u64 << (degree + 1);
        let mut cand = lo | 1;
        while cand < hi {
            if gf2_irreducible(cand) {
                return Ok(cand);
            }
            cand += 2;
        }
        Err(Error::TableMiss { degree })
    }
}

// ---------------------------------------------------------------------------
// Field context and elements
// ---------------------------------------------------------------------------

/// An element of GF(2^m), tagged with the modulus of its owning context.
///
/// Elements are plain `Copy` data; all arithmetic goes through [`FieldCtx`]
/// methods. Ordering compares encodings, which is the canonical element
/// order used everywhere determinism matters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    key: u64,
    bits: u32,
}

impl Fe {
    /// Bit-packed polynomial-basis encoding.
    pub fn bits(self) -> u32 {
        self.bits
    }

    /// True for the zero element.
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({:#x} mod {:#x})", self.bits, self.key)
    }
}

/// A binary field GF(2^m) in polynomial-basis representation.
///
/// Cheap to copy; two contexts compare equal exactly when they have the same
/// degree and modulus. Construct with [`FieldCtx::new`] (explicit modulus) or
/// [`FieldCtx::from_table`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    m: u32,
    modulus: u64,
    generator_bits: u32,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx(GF(2^{}), modulus {:#x})", self.m, self.modulus)
    }
}

impl FieldCtx {
    /// Builds GF(2^m) with an explicit modulus (bit i = coefficient of xⁱ).
    ///
    /// The modulus must have degree exactly `m` and be irreducible over
    /// GF(2); the canonical generator is found here so that later generator
    /// lookups are free.
    pub fn new(m: u32, modulus: u64) -> Result<FieldCtx> {
        if m < 1 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: m });
        }
        let actual = if modulus == 0 {
            0
        } else {
            gf2_degree(modulus) as u32
        };
        if actual != m {
            return Err(Error::DegreeMismatch {
                modulus,
                expected: m,
                actual,
            });
        }
        if !gf2_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        let mut ctx = FieldCtx {
            m,
            modulus,
            generator_bits: 0,
        };
        ctx.generator_bits = ctx.find_generator();
        Ok(ctx)
    }

    /// Builds GF(2^m) with the table's modulus for degree `m`.
    pub fn from_table(table: &ModulusTable, m: u32) -> Result<FieldCtx> {
        FieldCtx::new(m, table.modulus_for(m)?)
    }

    fn find_generator(&self) -> u32 {
        let group = self.unit_group_order();
        let factors = factorize(group);
        'cand: for bits in 1..self.size() {
            let x = Fe {
                key: self.modulus,
                bits: bits as u32,
            };
            for &(p, _) in &factors {
                if self.pow(x, group / p) == self.one() && group / p < group {
                    continue 'cand;
                }
            }
            return bits as u32;
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Extension degree m over GF(2).
    pub fn degree(self) -> u32 {
        self.m
    }

    /// Modulus polynomial bits.
    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Lowercase hex rendering of the modulus bits (as in the table format).
    pub fn modulus_hex(self) -> String {
        format!("{:x}", self.modulus)
    }

    /// Number of elements, 2^m.
    pub fn size(self) -> u64 {
        1u64 << self.m
    }

    /// Order of the multiplicative group, 2^m − 1.
    pub fn unit_group_order(self) -> u64 {
        self.size() - 1
    }

    #[inline]
    #[track_caller]
    fn check(self, x: Fe) {
        assert!(
            x.key == self.modulus,
            "field context mismatch: element of GF(2^?) mod {:#x} used in GF(2^{}) mod {:#x}",
            x.key,
            self.m,
            self.modulus
        );
    }

    /// Wraps an encoding as an element. Panics if `bits` is out of range —
    /// encodings are only meaningful below 2^m.
    #[track_caller]
    pub fn elem(self, bits: u32) -> Fe {
        assert!(
            (bits as u64) < self.size(),
            "encoding {bits:#x} out of range for GF(2^{})",
            self.m
        );
        Fe {
            key: self.modulus,
            bits,
        }
    }

    /// The zero element.
    pub fn zero(self) -> Fe {
        self.elem(0)
    }

    /// The one element.
    pub fn one(self) -> Fe {
        self.elem(1)
    }

    /// The canonical generator: smallest encoding of order 2^m − 1.
    pub fn generator(self) -> Fe {
        self.elem(self.generator_bits)
    }

    /// `generator^e` with the exponent reduced modulo 2^m − 1.
    pub fn gen_pow(self, e: u64) -> Fe {
        self.pow(self.generator(), e % self.unit_group_order())
    }

    /// True when `x` belongs to this context.
    pub fn owns(self, x: Fe) -> bool {
        x.key == self.modulus
    }

    /// Addition (bitwise xor; subtraction is identical in characteristic 2).
    #[track_caller]
    pub fn add(self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        Fe {
            key: self.modulus,
            bits: a.bits ^ b.bits,
        }
    }

    /// Multiplication by shift-and-reduce.
    #[track_caller]
    pub fn mul(self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        let mut acc: u64 = 0;
        let mut aa: u64 = a.bits as u64;
        let mut bb: u64 = b.bits as u64;
        let top: u64 = 1u64 << self.m;
        while bb != 0 {
            if bb & 1 == 1 {
                acc ^= aa;
            }
            bb >>= 1;
            aa <<= 1;
            if aa & top != 0 {
                aa ^= self.modulus;
            }
        }
        Fe {
            key: self.modulus,
            bits: acc as u32,
        }
    }

    /// Squaring (just multiplication; kept for readability at call sites).
    pub fn square(self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// `x^e` by square-and-multiply; `x^0 = 1` including for `x = 0`.
    pub fn pow(self, x: Fe, e: u64) -> Fe {
        self.check(x);
        if e == 0 {
            return self.one();
        }
        if x.is_zero() {
            return self.zero();
        }
        let e = e % self.unit_group_order();
        if e == 0 {
            return self.one();
        }
        let mut base = x;
        let mut acc = self.one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse as the Fermat power x^(2^m − 2).
    pub fn inv(self, x: Fe) -> Result<Fe> {
        self.check(x);
        if x.is_zero() {
            return Err(Error::DivisionByZero { degree: self.m });
        }
        Ok(self.pow(x, self.unit_group_order() - 1))
    }

    /// `a / b`.
    pub fn div(self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root x^(2^(m−1)) — squaring is a bijection in
    /// characteristic 2.
    pub fn sqrt(self, x: Fe) -> Fe {
        let mut y = x;
        for _ in 0..self.m.saturating_sub(1) {
            y = self.square(y);
        }
        y
    }

    /// Frobenius power x^(2^j).
    pub fn frobenius(self, x: Fe, j: u32) -> Fe {
        let mut y = x;
        for _ in 0..(j % self.m.max(1)) {
            y = self.square(y);
        }
        // j reduced mod m: x^(2^m) = x.
        let _ = j;
        y
    }

    /// Multiplicative order; divides 2^m − 1. Zero is rejected.
    pub fn order(self, x: Fe) -> Result<u64> {
        self.check(x);
        if x.is_zero() {
            return Err(Error::OrderOfZero);
        }
        let group = self.unit_group_order();
        let mut ord = group;
        for (p, _) in factorize(group) {
            while ord % p == 0 && self.pow(x, ord / p) == self.one() {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// Relative trace onto the subfield of degree `sub_degree`:
    /// Tr(x) = Σ_{i=0}^{m/s − 1} x^(2^(s·i)). The result is an element of
    /// this context that lies in the subfield image.
    pub fn trace_to_subfield(self, sub_degree: u32, x: Fe) -> Result<Fe> {
        self.check(x);
        if sub_degree == 0 || self.m % sub_degree != 0 {
            return Err(Error::NonDivisorDegree {
                sub: sub_degree,
                sup: self.m,
            });
        }
        let steps = self.m / sub_degree;
        let mut acc = x;
        let mut term = x;
        for _ in 1..steps {
            term = self.frobenius(term, sub_degree);
            acc = self.add(acc, term);
        }
        Ok(acc)
    }

    /// Absolute trace onto GF(2), returned as 0 or 1.
    pub fn abs_trace(self, x: Fe) -> u32 {
        self.trace_to_subfield(1, x)
            .expect("1 divides every degree")
            .bits()
    }

    /// Solves y² + y = t.
    ///
    /// Returns the two solutions `(y, y + 1)` ordered by encoding when the
    /// absolute trace of `t` is 0, and `None` otherwise — the trace is the
    /// complete obstruction. Deterministic: odd-degree contexts use the
    /// half-trace, even-degree contexts the direct formula through the
    /// smallest-encoding element of trace 1.
    pub fn solve_artin_schreier(self, t: Fe) -> Option<(Fe, Fe)> {
        self.check(t);
        if self.abs_trace(t) != 0 {
            return None;
        }
        let y = if self.m % 2 == 1 {
            // Half-trace: Σ t^(2^(2i)), i = 0..(m−1)/2.
            let mut acc = t;
            let mut term = t;
            for _ in 0..(self.m - 1) / 2 {
                term = self.frobenius(term, 2);
                acc = self.add(acc, term);
            }
            acc
        } else {
            // Even degree: fix the smallest δ with Tr(δ) = 1 and apply
            // y = Σ_{i=0}^{m−2} (Σ_{j=i+1}^{m−1} δ^(2^j)) · t^(2^i).
            let delta = self.smallest_trace_one();
            let m = self.m as usize;
            let mut dpow = vec![delta; m];
            for j in 1..m {
                dpow[j] = self.square(dpow[j - 1]);
            }
            let mut suffix = self.zero(); // Σ_{j>i} δ^(2^j), built downward
            let mut tpow = t;
            let mut tpows = vec![t; m - 1];
            for i in 1..m - 1 {
                tpow = self.square(tpow);
                tpows[i] = tpow;
            }
            let mut acc = self.zero();
            for i in (0..m - 1).rev() {
                suffix = self.add(suffix, dpow[i + 1]);
                acc = self.add(acc, self.mul(suffix, tpows[i]));
            }
            acc
        };
        let y1 = self.add(y, self.one());
        Some(if y.bits() < y1.bits() { (y, y1) } else { (y1, y) })
    }

    fn smallest_trace_one(self) -> Fe {
        for bits in 1..self.size() {
            let x = self.elem(bits as u32);
            if self.abs_trace(x) == 1 {
                return x;
            }
        }
        unreachable!("the absolute trace is onto")
    }

    /// All elements in encoding order. The iterator itself is lazy; callers
    /// that materialize a whole field should respect [`ENUM_CAP`].
    pub fn elements(self) -> impl Iterator<Item = Fe> {
        (0..self.size()).map(move |bits| Fe {
            key: self.modulus,
            bits: bits as u32,
        })
    }

    /// Discrete logarithm base the canonical generator, by baby-step
    /// giant-step. `None` for zero.
    pub fn dlog(self, x: Fe) -> Option<u64> {
        self.check(x);
        if x.is_zero() {
            return None;
        }
        let n = self.unit_group_order();
        let s = (n as f64).sqrt().ceil() as u64;
        let g = self.generator();
        // Baby steps: g^j for j < s.
        let mut table = HashMap::with_capacity(s as usize);
        let mut cur = self.one();
        for j in 0..s {
            table.entry(cur.bits()).or_insert(j);
            cur = self.mul(cur, g);
        }
        // Giant steps: x · (g^{-s})^i.
        let giant = self.pow(self.inv(g).expect("generator is nonzero"), s);
        let mut cur = x;
        for i in 0..=s {
            if let Some(&j) = table.get(&cur.bits()) {
                return Some((i * s + j) % n);
            }
            cur = self.mul(cur, giant);
        }
        unreachable!("dlog exists for every nonzero element")
    }

    /// Canonical text for an element: `0`, `1`, or `g^k` with k ≥ 1.
    pub fn format_elem(self, x: Fe) -> String {
        self.check(x);
        if x.is_zero() {
            return "0".to_string();
        }
        match self.dlog(x) {
            Some(0) => "1".to_string(),
            Some(k) => format!("g^{k}"),
            None => unreachable!(),
        }
    }

    /// Parses `0`, `1`, `g`, or `g^k` (k any non-negative integer, reduced
    /// modulo 2^m − 1).
    pub fn parse_elem(self, s: &str) -> Result<Fe> {
        let s = s.trim();
        let bad = |why: &str| Error::Parse {
            what: "field element",
            input: s.to_string(),
            why: why.to_string(),
        };
        match s {
            "0" => Ok(self.zero()),
            "1" => Ok(self.one()),
            "g" => Ok(self.generator()),
            _ => {
                let exp = s
                    .strip_prefix("g^")
                    .ok_or_else(|| bad("expected 0, 1, g, or g^<k>"))?;
                let k: u64 = exp
                    .parse()
                    .map_err(|_| bad("exponent is not a non-negative integer"))?;
                Ok(self.gen_pow(k))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Tower embeddings
// ---------------------------------------------------------------------------

/// The embedding GF(2^n) → GF(2^{ns}) that sends the subfield's `x`-class to
/// the canonical (smallest-encoding) root of the subfield modulus inside the
/// extension.
///
/// The image is exactly the fixed set of the n-fold Frobenius, so
/// [`TowerEmbedding::contains`] is a two-squaring test and
/// [`TowerEmbedding::pullback`] recovers subfield coordinates by solving a
/// small GF(2) linear system.
#[derive(Clone, PartialEq, Eq)]
pub struct TowerEmbedding {
    sub: FieldCtx,
    sup: FieldCtx,
    root: Fe,
    /// root^0 .. root^(n−1), the images of the subfield basis.
    powers: Vec<Fe>,
}

impl fmt::Debug for TowerEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TowerEmbedding(GF(2^{}) -> GF(2^{}), root {:#x})",
            self.sub.degree(),
            self.sup.degree(),
            self.root.bits()
        )
    }
}

impl TowerEmbedding {
    /// Builds GF(2^{n·s}) from the table and embeds `sub` into it.
    pub fn new(table: &ModulusTable, sub: FieldCtx, s: u32) -> Result<TowerEmbedding> {
        if s == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0 });
        }
        let ns = sub
            .degree()
            .checked_mul(s)
            .filter(|&d| d <= MAX_DEGREE)
            .ok_or(Error::DegreeOutOfRange {
                degree: sub.degree().saturating_mul(s),
            })?;
        let sup = FieldCtx::from_table(table, ns)?;
        TowerEmbedding::with_sup(sub, sup)
    }

    /// Embeds `sub` into an already-built extension whose degree is a
    /// multiple of `sub`'s.
    pub fn with_sup(sub: FieldCtx, sup: FieldCtx) -> Result<TowerEmbedding> {
        if sup.degree() % sub.degree() != 0 {
            return Err(Error::NonDivisorDegree {
                sub: sub.degree(),
                sup: sup.degree(),
            });
        }
        let root = if sub == sup {
            // The x-class is always the smallest-encoding root of the modulus
            // in its own field (0 and 1 are never roots of an irreducible
            // modulus of degree ≥ 2; degree 1 means GF(2), where the root
            // of x + 1 is 1).
            if sub.degree() == 1 {
                sub.one()
            } else {
                sub.elem(2)
            }
        } else {
            Self::find_root(sub, sup)?
        };
        let n = sub.degree() as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = sup.one();
        for _ in 0..n {
            powers.push(cur);
            cur = sup.mul(cur, root);
        }
        Ok(TowerEmbedding {
            sub,
            sup,
            root,
            powers,
        })
    }

    /// The identity embedding of a context into itself.
    pub fn identity(ctx: FieldCtx) -> TowerEmbedding {
        TowerEmbedding::with_sup(ctx, ctx).expect("identity embedding always exists")
    }

    fn find_root(sub: FieldCtx, sup: FieldCtx) -> Result<Fe> {
        // All roots of the subfield modulus lie in the unique subfield of
        // size 2^n, whose nonzero part is generated by
        // γ = generator^((2^ns − 1)/(2^n − 1)); scanning its powers keeps the
        // search at 2^n evaluations instead of 2^ns.
        let n = sub.degree();
        if sub.degree() == sup.degree() && sub.size() > ENUM_CAP {
            return Err(Error::ScaleExceeded {
                what: "isomorphism root search",
                amount: sub.size(),
                cap: ENUM_CAP,
            });
        }
        let idx = sup.unit_group_order() / ((1u64 << n) - 1);
        let gamma = sup.pow(sup.generator(), idx);
        let eval_modulus = |e: Fe| -> Fe {
            // Horner evaluation of the GF(2)-coefficient modulus at e.
            let mut acc = sup.zero();
            for i in (0..=n).rev() {
                acc = sup.mul(acc, e);
                if sub.modulus() >> i & 1 == 1 {
                    acc = sup.add(acc, sup.one());
                }
            }
            acc
        };
        let mut best: Option<Fe> = None;
        let mut cur = sup.one();
        for _ in 0..(1u64 << n) - 1 {
            if eval_modulus(cur).is_zero() && best.map_or(true, |b| cur.bits() < b.bits()) {
                best = Some(cur);
            }
            cur = sup.mul(cur, gamma);
        }
        best.ok_or(Error::TableMiss { degree: n })
    }

    /// The subfield context.
    pub fn sub(&self) -> FieldCtx {
        self.sub
    }

    /// The extension context.
    pub fn sup(&self) -> FieldCtx {
        self.sup
    }

    /// The canonical root the subfield's x-class maps to.
    pub fn root(&self) -> Fe {
        self.root
    }

    /// Extension degree of the tower step, s = sup / sub.
    pub fn relative_degree(&self) -> u32 {
        self.sup.degree() / self.sub.degree()
    }

    /// Applies the embedding.
    #[track_caller]
    pub fn embed(&self, x: Fe) -> Fe {
        assert!(self.sub.owns(x), "embed: element not from the subfield context");
        let mut acc = self.sup.zero();
        for (i, &p) in self.powers.iter().enumerate() {
            if x.bits() >> i & 1 == 1 {
                acc = self.sup.add(acc, p);
            }
        }
        acc
    }

    /// True when `y` lies in the embedded subfield (fixed by the n-fold
    /// Frobenius).
    pub fn contains(&self, y: Fe) -> bool {
        self.sup.frobenius(y, self.sub.degree()) == y
    }

    /// Inverts the embedding: the subfield element mapping to `y`, or `None`
    /// when `y` is outside the image.
    pub fn pullback(&self, y: Fe) -> Option<Fe> {
        assert!(self.sup.owns(y), "pullback: element not from the extension context");
        let n = self.sub.degree() as usize;
        let ns = self.sup.degree() as usize;
        // Solve Σ xᵢ·rootⁱ = y over GF(2). Row j is the x^j-coordinate
        // equation; bit i of a row is the coefficient of unknown xᵢ and bit n
        // holds the right-hand side.
        let mut rows: Vec<u32> = (0..ns)
            .map(|j| {
                let mut r = 0u32;
                for (i, &p) in self.powers.iter().enumerate() {
                    if p.bits() >> j & 1 == 1 {
                        r |= 1 << i;
                    }
                }
                if y.bits() >> j & 1 == 1 {
                    r |= 1 << n;
                }
                r
            })
            .collect();
        let mut pivot_rows = Vec::with_capacity(n);
        let mut used = vec![false; ns];
        for i in 0..n {
            let r = (0..ns)
                .find(|&r| !used[r] && rows[r] >> i & 1 == 1)
                .expect("basis powers are linearly independent");
            used[r] = true;
            pivot_rows.push(r);
            let row = rows[r];
            for (r2, other) in rows.iter_mut().enumerate() {
                if r2 != r && *other >> i & 1 == 1 {
                    *other ^= row;
                }
            }
        }
        // Any leftover nonzero row is a pure right-hand side: inconsistent.
        if rows
            .iter()
            .enumerate()
            .any(|(r, &row)| !used[r] && row != 0)
        {
            return None;
        }
        let mut bits = 0u32;
        for (i, &r) in pivot_rows.iter().enumerate() {
            if rows[r] >> n & 1 == 1 {
                bits |= 1 << i;
            }
        }
        Some(self.sub.elem(bits))
    }
}
