//! Dense univariate polynomials over one GF(2^m) context.
//!
//! Coefficients are stored low-to-high with trailing zeros stripped, so the
//! zero polynomial has an empty coefficient vector and `degree()` is `None`.
//! Everything at desk scale is schoolbook arithmetic; degrees stay small
//! enough (a few hundred at the very most) that nothing cleverer pays for
//! itself.
//!
//! Two independent irreducibility engines are provided on purpose:
//!
//! * [`is_irreducible`] — the fast Frobenius-power test (x^(q^d) ≡ x mod f
//!   plus coprimality at the maximal proper subextensions);
//! * [`is_irreducible_oracle`] — plain trial division, used as the
//!   cross-check oracle wherever its enumeration budget allows.
//!
//! Root extraction and equal-degree splitting are deterministic: they
//! separate factors with trace polynomials over a fixed basis scan rather
//! than random gcd probes, so repeated runs produce identical output.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2e::{Fe, FieldCtx, TowerEmbedding, ENUM_CAP};

/// A polynomial over a single field context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} over GF(2^{}))", self, self.ctx.degree())
    }
}

impl Poly {
    /// Builds a polynomial from low-to-high coefficients, stripping trailing
    /// zeros. All coefficients must belong to `ctx`.
    #[track_caller]
    pub fn from_coeffs(ctx: FieldCtx, mut coeffs: Vec<Fe>) -> Poly {
        for &c in &coeffs {
            assert!(ctx.owns(c), "coefficient from a different field context");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    /// Builds a polynomial from low-to-high bit encodings.
    pub fn from_bits(ctx: FieldCtx, bits: &[u32]) -> Poly {
        Poly::from_coeffs(ctx, bits.iter().map(|&b| ctx.elem(b)).collect())
    }

    /// The zero polynomial.
    pub fn zero(ctx: FieldCtx) -> Poly {
        Poly { ctx, coeffs: Vec::new() }
    }

    /// The constant 1.
    pub fn one(ctx: FieldCtx) -> Poly {
        Poly::constant(ctx, ctx.one())
    }

    /// A constant polynomial.
    pub fn constant(ctx: FieldCtx, c: Fe) -> Poly {
        Poly::from_coeffs(ctx, vec![c])
    }

    /// The monomial c·x^e.
    pub fn monomial(ctx: FieldCtx, c: Fe, e: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![ctx.zero(); e + 1];
        coeffs[e] = c;
        Poly { ctx, coeffs }
    }

    /// The identity polynomial x.
    pub fn x(ctx: FieldCtx) -> Poly {
        Poly::monomial(ctx, ctx.one(), 1)
    }

    /// The monic linear x + r.
    pub fn x_plus(ctx: FieldCtx, r: Fe) -> Poly {
        Poly::from_coeffs(ctx, vec![r, ctx.one()])
    }

    /// Owning context.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Low-to-high coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.ctx.zero())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or_else(|| self.ctx.zero())
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.lc() == self.ctx.one()
    }

    #[track_caller]
    fn check_ctx(&self, other: &Poly) {
        assert!(
            self.ctx == other.ctx,
            "polynomial context mismatch: GF(2^{}) vs GF(2^{})",
            self.ctx.degree(),
            other.ctx.degree()
        );
    }

    /// Sum (identical to difference in characteristic 2).
    pub fn add(&self, other: &Poly) -> Poly {
        self.check_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_coeffs(self.ctx, coeffs)
    }

    /// Product, schoolbook.
    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ctx.add(coeffs[i + j], self.ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(self.ctx, coeffs)
    }

    /// Scales every coefficient.
    pub fn mul_scalar(&self, c: Fe) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect();
        Poly::from_coeffs(self.ctx, coeffs)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, div: &Poly) -> Result<(Poly, Poly)> {
        self.check_ctx(div);
        if div.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let dd = div.degree().unwrap();
        let lc_inv = self.ctx.inv(div.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(self.ctx), self.clone()));
        }
        let mut quot = vec![self.ctx.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = self.ctx.mul(rem[i], lc_inv);
            quot[i - dd] = q;
            for (j, &dc) in div.coeffs.iter().enumerate() {
                let t = self.ctx.mul(q, dc);
                rem[i - dd + j] = self.ctx.add(rem[i - dd + j], t);
            }
        }
        Ok((
            Poly::from_coeffs(self.ctx, quot),
            Poly::from_coeffs(self.ctx, rem),
        ))
    }

    /// Remainder only.
    pub fn rem(&self, div: &Poly) -> Result<Poly> {
        Ok(self.divmod(div)?.1)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_ctx(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("gcd divisor is nonzero");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Divides out the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.ctx.inv(self.lc()).expect("nonzero leading coefficient");
        self.mul_scalar(inv)
    }

    /// Formal derivative. In characteristic 2 the even-degree terms vanish:
    /// (Σ cᵢ xⁱ)' = Σ_{i odd} cᵢ x^(i−1).
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() < 2 {
            return Poly::zero(self.ctx);
        }
        let coeffs = (1..self.coeffs.len())
            .map(|i| {
                if i % 2 == 1 {
                    self.coeffs[i]
                } else {
                    self.ctx.zero()
                }
            })
            .collect();
        Poly::from_coeffs(self.ctx, coeffs)
    }

    /// Evaluation by Horner's rule.
    #[track_caller]
    pub fn eval(&self, at: Fe) -> Fe {
        assert!(self.ctx.owns(at), "evaluation point from a different field context");
        let mut acc = self.ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = self.ctx.add(self.ctx.mul(acc, at), c);
        }
        acc
    }

    /// Canonical comparison: by degree, then by coefficient encodings from
    /// the leading term down. This is the order every sorted enumeration in
    /// the crate uses.
    #[track_caller]
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.check_ctx(other);
        let da = self.coeffs.len();
        let db = other.coeffs.len();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..da).rev() {
            let o = self.coeffs[i].bits().cmp(&other.coeffs[i].bits());
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

// ---------------------------------------------------------------------------
// Modular helpers
// ---------------------------------------------------------------------------

fn mulmod(a: &Poly, b: &Poly, f: &Poly) -> Poly {
    a.mul(b).rem(f).expect("modulus is nonzero")
}

/// x^(q^e) mod f, by iterated q-power (each q-power is `degree` squarings).
///
/// `f` must have degree ≥ 1; the result has degree < deg f.
pub fn frobenius_mod(f: &Poly, e: u32) -> Result<Poly> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::DegreeZero);
    }
    let ctx = f.ctx();
    let mut t = Poly::x(ctx).rem(f)?;
    for _ in 0..e {
        for _ in 0..ctx.degree() {
            t = mulmod(&t, &t, f);
        }
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Irreducibility
// ---------------------------------------------------------------------------

/// Fast irreducibility test for monic-normalizable f of degree ≥ 1:
/// f is irreducible over GF(q) iff x^(q^d) ≡ x (mod f) and, for every prime
/// p | d, gcd(x^(q^(d/p)) − x, f) = 1. Repeated factors fail the first
/// congruence, so square-freeness is not assumed.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let Some(d) = f.degree().filter(|&d| d >= 1) else {
        return Err(Error::DegreeZero);
    };
    if d == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let x = Poly::x(f.ctx()).rem(&f)?;
    if frobenius_mod(&f, d as u32)? != x {
        return Ok(false);
    }
    for (p, _) in factorize_usize(d) {
        let t = frobenius_mod(&f, (d / p) as u32)?;
        let g = f.gcd(&t.add(&x));
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn factorize_usize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
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

fn trial_division_budget(ctx: FieldCtx, degree: usize) -> u64 {
    let mut total = 0u64;
    let mut pow = 1u64;
    for _ in 1..=(degree / 2) {
        pow = pow.saturating_mul(ctx.size());
        total = total.saturating_add(pow);
    }
    total
}

/// Independent irreducibility oracle by exhaustive trial division.
///
/// Refuses when the divisor enumeration (Σ_{d ≤ deg/2} q^d candidates) would
/// exceed the desk-scale cap.
pub fn is_irreducible_oracle(f: &Poly) -> Result<bool> {
    let Some(d) = f.degree().filter(|&d| d >= 1) else {
        return Err(Error::DegreeZero);
    };
    if d == 1 {
        return Ok(true);
    }
    let budget = trial_division_budget(f.ctx(), d);
    if budget > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "trial-division enumeration",
            amount: budget,
            cap: ENUM_CAP,
        });
    }
    let f = f.monic();
    for dd in 1..=(d / 2) {
        let mut iter = MonicPolyIter::new(f.ctx(), dd);
        while let Some(p) = iter.next_poly() {
            if f.rem(&p)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ascending enumeration of the monic polynomials of one degree (coefficient
/// tuples in mixed-radix counter order, constant coefficient fastest).
struct MonicPolyIter {
    ctx: FieldCtx,
    state: Vec<u32>,
    done: bool,
}

impl MonicPolyIter {
    fn new(ctx: FieldCtx, degree: usize) -> MonicPolyIter {
        MonicPolyIter {
            ctx,
            state: vec![0; degree],
            done: false,
        }
    }

    fn next_poly(&mut self) -> Option<Poly> {
        if self.done {
            return None;
        }
        let mut coeffs: Vec<Fe> = self.state.iter().map(|&b| self.ctx.elem(b)).collect();
        coeffs.push(self.ctx.one());
        let out = Poly::from_coeffs(self.ctx, coeffs);
        // Increment the mixed-radix counter.
        let q = self.ctx.size() as u32;
        let mut i = 0;
        loop {
            if i == self.state.len() {
                self.done = true;
                break;
            }
            self.state[i] += 1;
            if self.state[i] < q {
                break;
            }
            self.state[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// Full factorization by repeated trial division, for oracle use.
///
/// Returns the monic irreducible factors with multiplicity, sorted
/// canonically; the product of the factors times `f`'s leading coefficient
/// reproduces `f` exactly. Square-freeness is not assumed.
pub fn factor_oracle(f: &Poly) -> Result<Vec<Poly>> {
    let Some(d) = f.degree() else {
        return Err(Error::DegreeZero);
    };
    if d == 0 {
        return Ok(Vec::new());
    }
    let budget = trial_division_budget(f.ctx(), d);
    if budget > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "trial-division enumeration",
            amount: budget,
            cap: ENUM_CAP,
        });
    }
    let mut rest = f.monic();
    let mut factors = Vec::new();
    'degrees: for dd in 1..=(d / 2) {
        if rest.degree() == Some(0) {
            break 'degrees;
        }
        let mut iter = MonicPolyIter::new(f.ctx(), dd);
        while let Some(p) = iter.next_poly() {
            loop {
                let (q, r) = rest.divmod(&p)?;
                if !r.is_zero() {
                    break;
                }
                factors.push(p.clone());
                rest = q;
                if rest.degree() == Some(0) {
                    break 'degrees;
                }
            }
            if rest.degree().unwrap_or(0) / 2 < dd {
                break;
            }
        }
    }
    if rest.degree().unwrap_or(0) >= 1 {
        factors.push(rest);
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(factors)
}

// ---------------------------------------------------------------------------
// Roots and equal-degree splitting
// ---------------------------------------------------------------------------

/// The distinct roots of `f` in its own context, in encoding order.
///
/// The linear part is extracted as gcd(f, x^q − x) and then split with
/// deterministic trace polynomials, so no field-wide scan is ever needed.
pub fn roots_in_ctx(f: &Poly) -> Result<Vec<Fe>> {
    let Some(d) = f.degree() else {
        return Err(Error::DegreeZero); // every point is a root of zero
    };
    if d == 0 {
        return Ok(Vec::new());
    }
    let ctx = f.ctx();
    let f = f.monic();
    if d == 1 {
        return Ok(vec![f.coeff(0)]);
    }
    // gcd(f, x^q − x) = product of (x − α) over the distinct roots α in ctx.
    let t = frobenius_mod(&f, 1)?;
    let linear = f.gcd(&t.add(&Poly::x(ctx).rem(&f)?));
    let mut roots = Vec::new();
    collect_roots(&linear, &mut roots);
    roots.sort();
    Ok(roots)
}

/// Splits a product of distinct monic linear factors into its roots, by
/// recursive trace-kernel separation over the polynomial basis.
fn collect_roots(l: &Poly, out: &mut Vec<Fe>) {
    let ctx = l.ctx();
    match l.degree() {
        None | Some(0) => {}
        Some(1) => out.push(l.coeff(0)),
        Some(_) => {
            for i in 0..ctx.degree() {
                let c = ctx.elem(1 << i);
                // T(x) = Σ_j (c·x)^(2^j): the absolute-trace polynomial of
                // c·x, which takes values in {0, 1} on ctx. Distinct roots
                // differ at some basis multiplier because the trace form is
                // non-degenerate.
                let cx = Poly::monomial(ctx, c, 1).rem(l).expect("deg ≥ 2");
                let mut term = cx.clone();
                let mut acc = cx;
                for _ in 1..ctx.degree() {
                    term = mulmod(&term, &term, l);
                    acc = acc.add(&term);
                }
                let g = l.gcd(&acc);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < l.degree().unwrap() {
                    let (rest, r) = l.divmod(&g).expect("gcd divides");
                    debug_assert!(r.is_zero());
                    collect_roots(&g, out);
                    collect_roots(&rest, out);
                    return;
                }
            }
            unreachable!("trace separation always splits a square-free linear part");
        }
    }
}

/// Splits `f`, a product of pairwise-distinct monic irreducibles all of
/// degree `d`, into those factors (sorted canonically).
///
/// Separation is deterministic: trace polynomials of c·x^e over the
/// polynomial basis, with the exponent ladder e = 1, 2, … — two distinct
/// irreducible factors always disagree on some test because the power sums
/// of their roots cannot all coincide.
pub fn split_equal_degree(f: &Poly, d: usize) -> Result<Vec<Poly>> {
    let Some(df) = f.degree().filter(|&df| df >= 1) else {
        return Err(Error::DegreeZero);
    };
    assert!(d >= 1 && df % d == 0, "degree {df} is not a multiple of the factor degree {d}");
    let ctx = f.ctx();
    let mut done = Vec::new();
    let mut work = vec![f.monic()];
    let trace_len = d as u32 * ctx.degree();
    'ladder: for e in 1..=(2 * df) {
        for i in 0..ctx.degree() {
            let c = ctx.elem(1 << i);
            let mut next = Vec::new();
            for w in work {
                if w.degree() == Some(d) {
                    done.push(w);
                    continue;
                }
                // U(x) = Σ_{j < d·m} (c·x^e)^(2^j) mod w — constant 0 or 1 on
                // the roots of each irreducible factor, so gcd(w, U) collects
                // the factors on the 0 side.
                let cxe = Poly::monomial(ctx, c, e).rem(&w).expect("deg ≥ 1");
                let mut term = cxe.clone();
                let mut acc = cxe;
                for _ in 1..trace_len {
                    term = mulmod(&term, &term, &w);
                    acc = acc.add(&term);
                }
                let g = w.gcd(&acc);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < w.degree().unwrap() {
                    let (rest, r) = w.divmod(&g).expect("gcd divides");
                    debug_assert!(r.is_zero());
                    next.push(g);
                    next.push(rest);
                } else {
                    next.push(w);
                }
            }
            work = next;
            if work.is_empty() {
                break 'ladder;
            }
        }
    }
    done.extend(work);
    for p in &done {
        assert_eq!(p.degree(), Some(d), "equal-degree split did not converge");
    }
    done.sort_by(|a, b| a.canonical_cmp(b));
    Ok(done)
}

// ---------------------------------------------------------------------------
// Tower transport
// ---------------------------------------------------------------------------

/// Maps a polynomial over the subfield to the extension, coefficient-wise.
pub fn embed_poly(tower: &TowerEmbedding, f: &Poly) -> Poly {
    assert!(f.ctx() == tower.sub(), "embed_poly: polynomial is not over the subfield");
    Poly::from_coeffs(
        tower.sup(),
        f.coeffs().iter().map(|&c| tower.embed(c)).collect(),
    )
}

/// Maps a polynomial over the extension back to the subfield. Fails with
/// [`Error::CoefficientsNotRational`] when any coefficient is outside the
/// embedded image.
pub fn descend_poly(tower: &TowerEmbedding, f: &Poly) -> Result<Poly> {
    assert!(f.ctx() == tower.sup(), "descend_poly: polynomial is not over the extension");
    let coeffs = f
        .coeffs()
        .iter()
        .map(|&c| tower.pullback(c).ok_or(Error::CoefficientsNotRational))
        .collect::<Result<Vec<Fe>>>()?;
    Ok(Poly::from_coeffs(tower.sub(), coeffs))
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

impl fmt::Display for Poly {
    /// Canonical text: terms from the leading one down, zero coefficients
    /// skipped, coefficients in generator-power notation — for example
    /// `x^2 + g^1*x + g^1` or `x^10 + x^8 + 1`. The zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff_txt = self.ctx.format_elem(c);
            match (i, coeff_txt.as_str()) {
                (0, t) => write!(f, "{t}")?,
                (1, "1") => write!(f, "x")?,
                (1, t) => write!(f, "{t}*x")?,
                (_, "1") => write!(f, "x^{i}")?,
                (_, t) => write!(f, "{t}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses the canonical polynomial text format (as printed by `Display`;
/// also accepts `g` for `g^1` and repeated terms, which accumulate).
pub fn parse_poly(ctx: FieldCtx, s: &str) -> Result<Poly> {
    let bad = |why: String| Error::Parse {
        what: "polynomial",
        input: s.to_string(),
        why,
    };
    let mut terms: Vec<(usize, Fe)> = Vec::new();
    for raw in s.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(bad("empty term".into()));
        }
        let (coeff_txt, x_txt) = match term.split_once('*') {
            Some((c, x)) => (c.trim(), Some(x.trim())),
            None => {
                if term.starts_with('x') {
                    ("1", Some(term))
                } else {
                    (term, None)
                }
            }
        };
        let coeff = ctx.parse_elem(coeff_txt)?;
        let exp = match x_txt {
            None => 0usize,
            Some("x") => 1,
            Some(x) => x
                .strip_prefix("x^")
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| bad(format!("bad power {x:?}")))?,
        };
        terms.push((exp, coeff));
    }
    let deg = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
    let mut coeffs = vec![ctx.zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] = ctx.add(coeffs[e], c);
    }
    Ok(Poly::from_coeffs(ctx, coeffs))
}
