//! Projectively invariant polynomials.
//!
//! A Möbius map A(x) = (ax + b)/(cx + d) acts on polynomials of degree r by
//! the twisted substitution
//!
//! ```text
//! g_A(x) = (cx + d)^r · g(A(x)),
//! ```
//!
//! and g is *invariant* under A when g_A = γ·g for a scalar γ — equivalently,
//! when the root multiset of g (viewed on the projective line) is carried to
//! itself by A. Invariant irreducible polynomials are the building blocks for
//! Goppa codes with prescribed automorphisms, so this module provides both
//! the pointwise checker and constructive enumerations:
//!
//! * for involutions ((a, b), (1, a)) the invariant irreducible quadratics
//!   are x² + kx + (ak + b) with k drawn from a half-size parameter set T;
//! * for order-3 maps ((a, b), (1, d)) (which force b = a² + ad + d²) the
//!   invariant irreducible cubics are indexed by two cosets T₁, T₂ of a
//!   three-way splitting of the parameter line;
//! * higher even/odd degrees 2s and 3s come from the same sets read over the
//!   extension GF(q^s) and pushed back down by Frobenius-orbit products;
//! * the trinomial-like polynomial h(x) = x^(Q+1) + d·x^Q + a·x + b collects
//!   every root on which the Q-power Frobenius acts as the map itself, and
//!   factors into fixed-point linears times invariant factors of degree
//!   equal to the order of the map.
//!
//! Everything here is deterministic and verified on the spot: factorizations
//! multiply back to h before they are returned.

use crate::error::{Error, Result};
use crate::gf2e::{Fe, FieldCtx, TowerEmbedding, ENUM_CAP};
use crate::polyring::{descend_poly, frobenius_mod, split_equal_degree, Poly};
use crate::projline::{embed_mobius, Mobius, ProjPoint};

/// Largest field size for which the h-polynomial (degree q^s + 1) is built
/// and factored explicitly; the quadratic-cost product verification stays
/// comfortably at desk scale below this.
pub const H_FIELD_CAP: u64 = 1 << 12;

// ---------------------------------------------------------------------------
// Transport and the invariance check
// ---------------------------------------------------------------------------

/// Proof data for a verified invariance: the transported polynomial and the
/// scalar γ with `transported = γ·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantWitness {
    pub gamma: Fe,
    pub transported: Poly,
}

/// The twisted substitution (cx + d)^r · g((ax + b)/(cx + d)) for the
/// normalized map, where r = deg g. For affine maps this is plain
/// composition g(ax + b).
pub fn transport(g: &Poly, map: &Mobius) -> Result<Poly> {
    let ctx = g.ctx();
    assert!(ctx == map.ctx(), "transport: polynomial and map contexts differ");
    let Some(r) = g.degree() else {
        return Err(Error::DegreeZero);
    };
    let num = Poly::from_coeffs(ctx, vec![map.b(), map.a()]);
    if map.is_affine() {
        // Horner composition g(ax + b).
        let mut acc = Poly::zero(ctx);
        for &c in g.coeffs().iter().rev() {
            acc = acc.mul(&num).add(&Poly::constant(ctx, c));
        }
        return Ok(acc);
    }
    let den = Poly::x_plus(ctx, map.d());
    let mut den_pows = Vec::with_capacity(r + 1);
    den_pows.push(Poly::one(ctx));
    for i in 0..r {
        let next = den_pows[i].mul(&den);
        den_pows.push(next);
    }
    let mut acc = Poly::zero(ctx);
    let mut num_pow = Poly::one(ctx);
    for i in 0..=r {
        let c = g.coeff(i);
        if !c.is_zero() {
            acc = acc.add(&num_pow.mul(&den_pows[r - i]).mul_scalar(c));
        }
        if i < r {
            num_pow = num_pow.mul(&num);
        }
    }
    Ok(acc)
}

/// Tests whether g is invariant under a fractional map, returning the scalar
/// witness on success and `None` when the polynomial simply is not invariant.
///
/// Preconditions turned into errors: the map must not be affine
/// ([`Error::AffineMatrix`]), g must have positive degree, and g must not
/// vanish at a = A(∞) ([`Error::RootAtA`]) — a root there would pull the
/// point at infinity into the root set and the transported polynomial would
/// drop degree.
pub fn check_invariance(g: &Poly, map: &Mobius) -> Result<Option<InvariantWitness>> {
    if map.is_affine() {
        return Err(Error::AffineMatrix);
    }
    if g.degree().unwrap_or(0) < 1 {
        return Err(Error::DegreeZero);
    }
    let ctx = g.ctx();
    if g.eval(map.a()).is_zero() {
        return Err(Error::RootAtA);
    }
    let transported = transport(g, map)?;
    debug_assert_eq!(transported.degree(), g.degree());
    let gamma = ctx
        .div(transported.lc(), g.lc())
        .expect("leading coefficients are nonzero");
    if transported == g.mul_scalar(gamma) {
        Ok(Some(InvariantWitness { gamma, transported }))
    } else {
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// Orbit polynomials
// ---------------------------------------------------------------------------

/// The smallest invariant polynomial through a chosen root: its coefficients
/// land in the tower's subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPolynomial {
    /// Monic, over the subfield context of the tower.
    pub poly: Poly,
    /// The roots in the extension, sorted by encoding.
    pub roots: Vec<Fe>,
}

/// Closes β ∈ GF(q^s) under both the embedded map and the q-power Frobenius
/// and returns the monic polynomial with exactly that root set, descended to
/// GF(q).
///
/// Fails with [`Error::FixedBeta`] when β is fixed by the map (the orbit
/// degenerates), and with [`Error::DomainNotClosed`] when the orbit runs into
/// the pole of the map.
pub fn orbit_polynomial(tower: &TowerEmbedding, map: &Mobius, beta: Fe) -> Result<OrbitPolynomial> {
    let sup = tower.sup();
    assert!(sup.owns(beta), "orbit seed from a different field context");
    assert!(map.ctx() == tower.sub(), "orbit map is not over the subfield");
    let up = embed_mobius(tower, map);
    if up.apply(ProjPoint::Finite(beta)) == ProjPoint::Finite(beta) {
        return Err(Error::FixedBeta);
    }
    let n = tower.sub().degree();
    let mut closure = std::collections::BTreeSet::new();
    let mut frontier = vec![beta];
    while let Some(x) = frontier.pop() {
        if !closure.insert(x) {
            continue;
        }
        if closure.len() as u64 > ENUM_CAP {
            return Err(Error::ScaleExceeded {
                what: "orbit closure",
                amount: closure.len() as u64,
                cap: ENUM_CAP,
            });
        }
        match up.apply(ProjPoint::Finite(x)) {
            ProjPoint::Finite(y) => frontier.push(y),
            ProjPoint::Infinity => {
                return Err(Error::DomainNotClosed {
                    point: sup.format_elem(x),
                    image: "inf".to_string(),
                })
            }
        }
        frontier.push(sup.frobenius(x, n));
    }
    let roots: Vec<Fe> = closure.into_iter().collect();
    let mut prod = Poly::one(sup);
    for &r in &roots {
        prod = prod.mul(&Poly::x_plus(sup, r));
    }
    let poly = descend_poly(tower, &prod)?;
    Ok(OrbitPolynomial { poly, roots })
}

// ---------------------------------------------------------------------------
// Parameter sets
// ---------------------------------------------------------------------------

/// A sorted parameter set indexing a family of invariant polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSet {
    ctx: FieldCtx,
    members: Vec<Fe>,
}

impl TSet {
    /// The field the parameters live in.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Sorted members.
    pub fn members(&self) -> &[Fe] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: Fe) -> bool {
        self.members.binary_search(&k).is_ok()
    }
}

/// The quadratic x² + kx + (ak + b) attached to the involution
/// ((a, b), (1, a)). It is irreducible and invariant exactly for k in the
/// parameter set of [`t_set_order2`].
pub fn invariant_quadratic(ctx: FieldCtx, a: Fe, b: Fe, k: Fe) -> Poly {
    Poly::from_coeffs(ctx, vec![ctx.add(ctx.mul(a, k), b), k, ctx.one()])
}

/// The parameter set T = {(a + √b)/c : Tr(c) = 1} of the involution
/// ((a, b), (1, a)) over `ctx`; it has exactly |ctx|/2 members and
/// parametrizes the invariant irreducible quadratics.
pub fn t_set_order2(ctx: FieldCtx, a: Fe, b: Fe) -> Result<TSet> {
    if b == ctx.square(a) {
        return Err(Error::DegenerateMatrix {
            a: ctx.format_elem(a),
            b: ctx.format_elem(b),
            c: "1".to_string(),
            d: ctx.format_elem(a),
        });
    }
    if ctx.size() > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "parameter-set enumeration",
            amount: ctx.size(),
            cap: ENUM_CAP,
        });
    }
    let base = ctx.add(a, ctx.sqrt(b));
    let mut members: Vec<Fe> = ctx
        .elements()
        .filter(|&c| ctx.abs_trace(c) == 1)
        .map(|c| ctx.div(base, c).expect("trace-one elements are nonzero"))
        .collect();
    members.sort();
    debug_assert_eq!(members.len() as u64, ctx.size() / 2);
    Ok(TSet { ctx, members })
}

/// The cubic x³ + kx² + (a² + k(a+d) + ad + d²)x + (a³ + kad + d³) attached
/// to the order-3 map ((a, a²+ad+d²), (1, d)). Depending on k it is either
/// irreducible, split with three distinct rational roots, or the cube
/// (x + k)³; see [`classify_cubic`].
pub fn invariant_cubic(ctx: FieldCtx, a: Fe, d: Fe, k: Fe) -> Poly {
    let a2 = ctx.square(a);
    let d2 = ctx.square(d);
    let ad = ctx.mul(a, d);
    let c1 = ctx.add(ctx.add(a2, ctx.mul(k, ctx.add(a, d))), ctx.add(ad, d2));
    let c0 = ctx.add(
        ctx.add(ctx.mul(a, a2), ctx.mul(k, ad)),
        ctx.mul(d, d2),
    );
    Poly::from_coeffs(ctx, vec![c0, c1, k, ctx.one()])
}

/// The order-3 matrix ((a, a² + ad + d²), (1, d)) — the unique invariant
/// value of b once a ≠ d is chosen.
pub fn order3_matrix(ctx: FieldCtx, a: Fe, d: Fe) -> Result<Mobius> {
    let b = ctx.add(ctx.add(ctx.square(a), ctx.mul(a, d)), ctx.square(d));
    Mobius::new_c1(ctx, a, b, d)
}

/// The three-way splitting of the cubic parameter line for the order-3 map
/// with entries a, d (so b = a² + ad + d²). Requires a primitive cube root
/// of unity in the field, i.e. 3 | q − 1.
///
/// With ω = gen^((q−1)/3) and D_j the coset of cubes scaled by gen^j, the
/// returned sets are T_j = {(a + d)/(c + 1) + aω + dω² : c ∈ D_j, c ≠ 1}.
/// T₁ and T₂ index the invariant irreducible cubics (one Frobenius direction
/// each); T₀ indexes the invariant cubics that split into three distinct
/// rational roots.
pub fn t_sets_order3(ctx: FieldCtx, a: Fe, d: Fe) -> Result<[TSet; 3]> {
    let q = ctx.size();
    if (q - 1) % 3 != 0 {
        return Err(Error::NoCubeRootOfUnity { q });
    }
    if a == d {
        let b = ctx.square(a); // a² + a·a + a² collapses to a²: singular matrix
        return Err(Error::DegenerateMatrix {
            a: ctx.format_elem(a),
            b: ctx.format_elem(b),
            c: "1".to_string(),
            d: ctx.format_elem(d),
        });
    }
    if q > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "parameter-set enumeration",
            amount: q,
            cap: ENUM_CAP,
        });
    }
    let third = (q - 1) / 3;
    let omega = ctx.gen_pow(third);
    let omega2 = ctx.square(omega);
    let base = ctx.add(a, d);
    let shift = ctx.add(ctx.mul(a, omega), ctx.mul(d, omega2));
    let mut members = [Vec::new(), Vec::new(), Vec::new()];
    for c in ctx.elements() {
        if c.is_zero() || c == ctx.one() {
            continue;
        }
        let chi = ctx.pow(c, third);
        let j = if chi == ctx.one() {
            0
        } else if chi == omega {
            1
        } else {
            debug_assert_eq!(chi, omega2);
            2
        };
        let k = ctx.add(
            ctx.div(base, ctx.add(c, ctx.one())).expect("c ≠ 1"),
            shift,
        );
        members[j].push(k);
    }
    let [mut m0, mut m1, mut m2] = members;
    m0.sort();
    m1.sort();
    m2.sort();
    debug_assert_eq!(m0.len() as u64, third - 1);
    debug_assert_eq!(m1.len() as u64, third);
    debug_assert_eq!(m2.len() as u64, third);
    Ok([
        TSet { ctx, members: m0 },
        TSet { ctx, members: m1 },
        TSet { ctx, members: m2 },
    ])
}

// ---------------------------------------------------------------------------
// Cubic classification
// ---------------------------------------------------------------------------

/// How an invariant cubic factors over its own field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicRootCount {
    /// Three distinct rational roots (one map orbit of size 3).
    ThreeInField,
    /// The cube (x + k)³ — k collides with a degenerate parameter value.
    TripleRoot,
    /// Irreducible; the roots live in the cubic extension.
    Irreducible,
}

/// Which power of the map the q-power Frobenius realizes on the roots of an
/// irreducible invariant polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusDirection {
    /// x ↦ x^q acts as the map itself.
    Map,
    /// x ↦ x^q acts as the square of the map.
    MapSquared,
}

/// Classification of one member of the cubic family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicClass {
    /// The cubic itself.
    pub cubic: Poly,
    /// Index j of the coset T_j the parameter falls in; `None` for the two
    /// degenerate (triple-root) parameter values.
    pub coset: Option<u8>,
    pub root_count: CubicRootCount,
    /// Present exactly when the cubic is irreducible.
    pub direction: Option<FrobeniusDirection>,
    /// The rational roots (3 for the split case, 1 for the cube, 0 when
    /// irreducible), sorted.
    pub roots: Vec<Fe>,
}

/// Determines, for an irreducible invariant polynomial g of the order-3 map
/// with entries (a, d), whether the q-power Frobenius moves its roots by the
/// map or by its square, via the modular identities
/// x^q·(x + d) ≡ ax + b and x^q·(x + a) ≡ dx + b (mod g).
fn cubic_direction(g: &Poly, a: Fe, d: Fe) -> FrobeniusDirection {
    let ctx = g.ctx();
    let b = ctx.add(ctx.add(ctx.square(a), ctx.mul(a, d)), ctx.square(d));
    let xq = frobenius_mod(g, 1).expect("degree ≥ 1");
    let probe = |p: Fe, r: Fe| {
        let lhs = xq.mul(&Poly::x_plus(ctx, p));
        let rhs = Poly::from_coeffs(ctx, vec![b, r]);
        lhs.add(&rhs).rem(g).expect("g nonzero").is_zero()
    };
    let forward = probe(d, a);
    let backward = probe(a, d);
    assert!(
        forward ^ backward,
        "an irreducible invariant cubic must satisfy exactly one direction identity"
    );
    if forward {
        FrobeniusDirection::Map
    } else {
        FrobeniusDirection::MapSquared
    }
}

/// Classifies the cubic attached to parameter k for the order-3 map with
/// entries (a, d): coset membership, root structure, rational roots, and —
/// when irreducible — the Frobenius direction.
pub fn classify_cubic(ctx: FieldCtx, a: Fe, d: Fe, k: Fe) -> Result<CubicClass> {
    let q = ctx.size();
    if (q - 1) % 3 != 0 {
        return Err(Error::NoCubeRootOfUnity { q });
    }
    if a == d {
        return Err(Error::DegenerateMatrix {
            a: ctx.format_elem(a),
            b: ctx.format_elem(ctx.square(a)),
            c: "1".to_string(),
            d: ctx.format_elem(d),
        });
    }
    let cubic = invariant_cubic(ctx, a, d, k);
    let b = ctx.add(ctx.add(ctx.square(a), ctx.mul(a, d)), ctx.square(d));
    // Degenerate parameters: k² + (a + d)k + (a² + ad + d²) = 0, whose two
    // roots collapse the cubic to (x + k)³.
    let disc = ctx.add(ctx.add(ctx.square(k), ctx.mul(k, ctx.add(a, d))), b);
    if disc.is_zero() {
        debug_assert_eq!(cubic, Poly::x_plus(ctx, k).mul(&Poly::x_plus(ctx, k)).mul(&Poly::x_plus(ctx, k)));
        return Ok(CubicClass {
            cubic,
            coset: None,
            root_count: CubicRootCount::TripleRoot,
            direction: None,
            roots: vec![k],
        });
    }
    // Invert the parametrization: k = (a + d)/(c + 1) + aω + dω².
    let third = (q - 1) / 3;
    let omega = ctx.gen_pow(third);
    let shift = ctx.add(ctx.mul(a, omega), ctx.mul(d, ctx.square(omega)));
    let c = ctx.add(
        ctx.div(ctx.add(a, d), ctx.add(k, shift))
            .expect("k ≠ aω + dω² away from the degenerate locus"),
        ctx.one(),
    );
    debug_assert!(!c.is_zero() && c != ctx.one());
    let chi = ctx.pow(c, third);
    let coset = if chi == ctx.one() {
        0u8
    } else if chi == omega {
        1
    } else {
        2
    };
    if coset == 0 {
        let roots = crate::polyring::roots_in_ctx(&cubic)?;
        debug_assert_eq!(roots.len(), 3);
        Ok(CubicClass {
            cubic,
            coset: Some(0),
            root_count: CubicRootCount::ThreeInField,
            direction: None,
            roots,
        })
    } else {
        let direction = cubic_direction(&cubic, a, d);
        Ok(CubicClass {
            cubic,
            coset: Some(coset),
            root_count: CubicRootCount::Irreducible,
            direction: Some(direction),
            roots: Vec::new(),
        })
    }
}

// ---------------------------------------------------------------------------
// Stratified enumeration of invariant irreducibles of degree 2s / 3s
// ---------------------------------------------------------------------------

/// The subfield layers (as relative degrees over the base) whose exclusion
/// isolates the parameters generating the full extension of relative degree
/// s. Supported shapes: s = 1, s = t^e (one prime), s = t₁t₂ (two distinct
/// primes); every element of a proper intermediate field then lies in one of
/// the returned maximal layers.
fn strata_exclusion_layers(s: u32) -> Result<Vec<u32>> {
    if s == 1 {
        return Ok(Vec::new());
    }
    let mut n = s;
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        primes.push((n, 1));
    }
    match primes.as_slice() {
        [(t, _)] => Ok(vec![s / t]),
        [(t1, 1), (t2, 1)] => Ok(vec![*t1, *t2]),
        _ => Err(Error::UnsupportedS {
            s: s as u64,
            why: "supported relative degrees are 1, prime powers, and products of two distinct primes",
        }),
    }
}

/// Splits the candidate parameters into Frobenius orbits of full length s,
/// discarding those lying in a proper intermediate field. Orbits are listed
/// by ascending smallest member, each starting at its smallest member.
fn full_frobenius_classes(tower: &TowerEmbedding, candidates: &[Fe]) -> Result<Vec<Vec<Fe>>> {
    let sup = tower.sup();
    let n = tower.sub().degree();
    let s = tower.relative_degree();
    let layers = strata_exclusion_layers(s)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut classes = Vec::new();
    let mut sorted = candidates.to_vec();
    sorted.sort();
    for &k in &sorted {
        if seen.contains(&k) {
            continue;
        }
        // Walk the q-power orbit.
        let mut orbit = Vec::new();
        let mut cur = k;
        loop {
            orbit.push(cur);
            seen.insert(cur);
            cur = sup.frobenius(cur, n);
            if cur == k {
                break;
            }
        }
        if layers.iter().any(|&u| sup.frobenius(k, n * u) == k) {
            continue; // lies in a proper intermediate field
        }
        assert_eq!(orbit.len() as u32, s, "full-strata orbit has length s");
        classes.push(orbit);
    }
    Ok(classes)
}

/// All invariant irreducible polynomials of degree 2s over the tower's base
/// field for the involution ((a, b), (1, a)) (entries in the base field).
/// Each is the descended product of the invariant quadratics over GF(q^s)
/// along one full Frobenius orbit of parameters.
pub fn enum_invariant_order2(tower: &TowerEmbedding, a: Fe, b: Fe) -> Result<Vec<Poly>> {
    let sub = tower.sub();
    assert!(sub.owns(a) && sub.owns(b), "map entries must lie in the base field");
    let sup = tower.sup();
    let (ea, eb) = (tower.embed(a), tower.embed(b));
    let t = t_set_order2(sup, ea, eb)?;
    let classes = full_frobenius_classes(tower, t.members())?;
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let mut prod = Poly::one(sup);
        for &k in &class {
            prod = prod.mul(&invariant_quadratic(sup, ea, eb, k));
        }
        out.push(descend_poly(tower, &prod)?);
    }
    out.sort_by(|x, y| x.canonical_cmp(y));
    Ok(out)
}

/// All invariant irreducible polynomials of degree 3s over the tower's base
/// field for the order-3 map with entries (a, d) in the base field. Needs a
/// primitive cube root of unity in GF(q^s).
pub fn enum_invariant_order3(tower: &TowerEmbedding, a: Fe, d: Fe) -> Result<Vec<Poly>> {
    let sub = tower.sub();
    assert!(sub.owns(a) && sub.owns(d), "map entries must lie in the base field");
    let sup = tower.sup();
    let (ea, ed) = (tower.embed(a), tower.embed(d));
    let [_, t1, t2] = t_sets_order3(sup, ea, ed)?;
    let mut candidates = Vec::with_capacity(t1.len() + t2.len());
    candidates.extend_from_slice(t1.members());
    candidates.extend_from_slice(t2.members());
    let classes = full_frobenius_classes(tower, &candidates)?;
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let mut prod = Poly::one(sup);
        for &k in &class {
            prod = prod.mul(&invariant_cubic(sup, ea, ed, k));
        }
        out.push(descend_poly(tower, &prod)?);
    }
    out.sort_by(|x, y| x.canonical_cmp(y));
    Ok(out)
}

// ---------------------------------------------------------------------------
// The h-polynomial and its factorization
// ---------------------------------------------------------------------------

/// A verified factorization of h(x) = x^(Q+1) + d·x^Q + a·x + b over GF(Q),
/// whose roots are exactly the points β with β^Q = B(β) for the chosen
/// direction B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFactorization {
    /// The order of the underlying map.
    pub order: u64,
    /// Which power of the map the Frobenius realizes on the non-fixed roots.
    pub direction: FrobeniusDirection,
    /// The polynomial that was factored, over GF(q^s).
    pub h: Poly,
    /// Monic linear factors — one per rational fixed point of the map.
    pub linear_factors: Vec<Poly>,
    /// The invariant irreducible factors, each of degree equal to the order
    /// of the map, sorted canonically.
    pub invariant_factors: Vec<Poly>,
}

/// Factors the direction polynomial of a fractional map of prime order.
///
/// The map lives over the tower's base field; the factorization is carried
/// out over GF(q^s) with Q = q^s. For order 2 the invariant factors come
/// from the parameter set in closed form; for order 3 they are the members
/// of the cubic family that divide h; for larger prime orders the fixed
/// points are stripped and the remainder is split into equal-degree factors.
/// The product of all returned factors is verified to reproduce h exactly,
/// and every invariant factor is verified invariant under the embedded map.
pub fn factor_h(
    tower: &TowerEmbedding,
    map: &Mobius,
    direction: FrobeniusDirection,
) -> Result<HFactorization> {
    assert!(map.ctx() == tower.sub(), "factor_h: map is not over the base field");
    if map.is_affine() {
        return Err(Error::AffineMatrix);
    }
    let l = map.order()?;
    let l_is_prime = l >= 2 && {
        let mut p = 2u64;
        loop {
            if p * p > l {
                break true;
            }
            if l % p == 0 {
                break false;
            }
            p += 1;
        }
    };
    if !l_is_prime {
        return Err(Error::UnsupportedOrder { l: l as u32 });
    }
    if direction == FrobeniusDirection::MapSquared && l == 2 {
        // The square of an involution is the identity; there is no such h.
        return Err(Error::UnsupportedOrder { l: 2 });
    }
    let b_map = match direction {
        FrobeniusDirection::Map => *map,
        FrobeniusDirection::MapSquared => map.compose(map),
    };
    // For prime order ≥ 3 no power of the map is affine (an affine power
    // would force a = d, i.e. an involution), and order 2 only uses the map
    // itself.
    assert!(!b_map.is_affine());
    let up = embed_mobius(tower, &b_map);
    let sup = tower.sup();
    let q_big = sup.size();
    if q_big > H_FIELD_CAP {
        return Err(Error::ScaleExceeded {
            what: "direction-polynomial factorization",
            amount: q_big,
            cap: H_FIELD_CAP,
        });
    }
    let qq = q_big as usize;
    // h = x^(Q+1) + d·x^Q + a·x + b from the direction matrix.
    let mut coeffs = vec![sup.zero(); qq + 2];
    coeffs[0] = up.b();
    coeffs[1] = up.a();
    coeffs[qq] = up.d();
    coeffs[qq + 1] = sup.one();
    let h = Poly::from_coeffs(sup, coeffs);
    // Rational fixed points of the map are exactly the rational roots of h,
    // and the nonzero determinant makes h square-free.
    let mut linear_factors: Vec<Poly> = up
        .fixed_points()
        .into_iter()
        .filter_map(|p| p.finite())
        .map(|r| Poly::x_plus(sup, r))
        .collect();
    linear_factors.sort_by(|x, y| x.canonical_cmp(y));
    let mut rest = h.clone();
    for lin in &linear_factors {
        let (quot, rem) = rest.divmod(lin)?;
        assert!(rem.is_zero(), "fixed point is not a root of h");
        rest = quot;
    }
    let invariant_factors = match l {
        2 => {
            let t = t_set_order2(sup, up.a(), up.b())?;
            t.members()
                .iter()
                .map(|&k| invariant_quadratic(sup, up.a(), up.b(), k))
                .collect::<Vec<Poly>>()
        }
        3 => {
            let [_, t1, t2] = t_sets_order3(sup, up.a(), up.d())?;
            let mut hits = Vec::new();
            for &k in t1.members().iter().chain(t2.members()) {
                let g = invariant_cubic(sup, up.a(), up.d(), k);
                if rest.rem(&g)?.is_zero() {
                    hits.push(g);
                }
            }
            assert_eq!(
                hits.len() as u64,
                (q_big - 1) / 3,
                "one full direction coset divides h"
            );
            hits
        }
        _ => {
            if rest.degree() == Some(0) {
                Vec::new()
            } else {
                split_equal_degree(&rest, l as usize)?
            }
        }
    };
    let mut invariant_factors = invariant_factors;
    invariant_factors.sort_by(|x, y| x.canonical_cmp(y));
    // Verify: the factors multiply back to h exactly…
    let mut prod = Poly::one(sup);
    for f in linear_factors.iter().chain(&invariant_factors) {
        prod = prod.mul(f);
    }
    assert_eq!(prod, h, "factorization does not multiply back to h");
    // …and every invariant factor really is invariant under the original map.
    let up_orig = embed_mobius(tower, map);
    for f in &invariant_factors {
        let ok = check_invariance(f, &up_orig)?.is_some();
        assert!(ok, "direction factor is not invariant under the map");
    }
    Ok(HFactorization {
        order: l,
        direction,
        h,
        linear_factors,
        invariant_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2e::ModulusTable;
    use crate::polyring::{
        embed_poly, is_irreducible, is_irreducible_oracle, parse_poly, roots_in_ctx,
    };

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::from_table(ModulusTable::builtin(), m).unwrap()
    }

    fn tower(sub_deg: u32, s: u32) -> TowerEmbedding {
        let table = ModulusTable::builtin();
        let sub = FieldCtx::from_table(table, sub_deg).unwrap();
        TowerEmbedding::new(table, sub, s).unwrap()
    }

    /// All monic polynomials of one degree over a small field.
    fn all_monic(c: FieldCtx, d: usize) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut counter = vec![0u32; d];
        loop {
            let mut coeffs: Vec<Fe> = counter.iter().map(|&b| c.elem(b)).collect();
            coeffs.push(c.one());
            out.push(Poly::from_coeffs(c, coeffs));
            let mut i = 0;
            loop {
                if i == counter.len() {
                    return out;
                }
                counter[i] += 1;
                if (counter[i] as u64) < c.size() {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn transport_matches_the_pointwise_twisted_substitution() {
        let c = ctx(3);
        let g = parse_poly(c, "x^3 + g^4*x + g^2").unwrap();
        let m = Mobius::new_c1(c, c.gen_pow(2), c.gen_pow(5), c.gen_pow(6)).unwrap();
        let t = transport(&g, &m).unwrap();
        for x in c.elements() {
            let den = c.add(x, m.d());
            if den.is_zero() {
                continue;
            }
            let ax = c.add(c.mul(m.a(), x), m.b());
            let image = c.div(ax, den).unwrap();
            let expect = c.mul(c.pow(den, 3), g.eval(image));
            assert_eq!(t.eval(x), expect);
        }
        // Affine transport is plain composition.
        let aff = Mobius::affine(c, c.gen_pow(3), c.one()).unwrap();
        let ta = transport(&g, &aff).unwrap();
        for x in c.elements() {
            let image = c.add(c.mul(aff.a(), x), aff.b());
            assert_eq!(ta.eval(x), g.eval(image));
        }
    }

    #[test]
    fn involution_parameter_set_over_f8_matches_hand_computation() {
        // For x ↦ (x + 0)/(x + 1)… i.e. entries a = 1, b = 0: the trace-one
        // elements of GF(8) are {1, g³, g⁵, g⁶}, so T = {1, g⁴, g², g}.
        let c = ctx(3);
        let t = t_set_order2(c, c.one(), c.zero()).unwrap();
        let expect: Vec<Fe> = {
            let mut v = vec![c.one(), c.gen_pow(1), c.gen_pow(2), c.gen_pow(4)];
            v.sort();
            v
        };
        assert_eq!(t.members(), expect.as_slice());
        assert!(t.contains(c.gen_pow(4)));
        assert!(!t.contains(c.gen_pow(3)));
    }

    #[test]
    fn invariant_quadratics_are_exactly_the_parameter_family() {
        // Brute ground truth over GF(8): a monic quadratic is invariant and
        // irreducible iff it is x² + kx + (ak + b) with k in the set.
        let c = ctx(3);
        let (a, b) = (c.one(), c.zero());
        let m = Mobius::new_c1(c, a, b, a).unwrap();
        assert_eq!(m.order().unwrap(), 2);
        let t = t_set_order2(c, a, b).unwrap();
        let family: Vec<Poly> = t
            .members()
            .iter()
            .map(|&k| invariant_quadratic(c, a, b, k))
            .collect();
        let mut brute = Vec::new();
        for q in all_monic(c, 2) {
            if q.eval(m.a()).is_zero() {
                continue; // root at A(∞): never invariant, excluded upstream
            }
            if is_irreducible(&q).unwrap() && check_invariance(&q, &m).unwrap().is_some() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        let mut fam = family.clone();
        fam.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(fam, brute);
        // The witness scalar for this family at a = 1, b = 0 is 1.
        for g in &family {
            let w = check_invariance(g, &m).unwrap().unwrap();
            assert_eq!(w.gamma, c.one());
            assert_eq!(w.transported, *g);
        }
    }

    #[test]
    fn invariance_preconditions_are_reported() {
        let c = ctx(3);
        let m = Mobius::new_c1(c, c.one(), c.zero(), c.one()).unwrap();
        // g(a) = g(1) = 0.
        let g = Poly::x_plus(c, c.one()).mul(&Poly::x_plus(c, c.generator()));
        assert!(matches!(check_invariance(&g, &m), Err(Error::RootAtA)));
        let aff = Mobius::affine(c, c.one(), c.one()).unwrap();
        assert!(matches!(
            check_invariance(&Poly::x(c), &aff),
            Err(Error::AffineMatrix)
        ));
        assert!(matches!(
            check_invariance(&Poly::one(c), &m),
            Err(Error::DegreeZero)
        ));
        let bad_b = c.square(c.one());
        assert!(matches!(
            t_set_order2(c, c.one(), bad_b),
            Err(Error::DegenerateMatrix { .. })
        ));
    }

    #[test]
    fn degree_4_enumeration_over_f4_matches_brute_force() {
        let tw = tower(2, 2);
        let f4 = tw.sub();
        let (a, b) = (f4.generator(), f4.one()); // det a² + b = g² + 1 ≠ 0
        let m = Mobius::new_c1(f4, a, b, a).unwrap();
        let fast = enum_invariant_order2(&tw, a, b).unwrap();
        let mut brute = Vec::new();
        for q in all_monic(f4, 4) {
            if q.eval(m.a()).is_zero() {
                continue;
            }
            if is_irreducible(&q).unwrap() && check_invariance(&q, &m).unwrap().is_some() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(fast, brute);
        assert!(!fast.is_empty());
    }

    #[test]
    fn prime_power_strata_degree_8_over_f2() {
        // x ↦ 1/x over GF(2), relative degree 4: parameters in GF(16) whose
        // quadratics assemble to invariant irreducible octics over GF(2).
        let tw = tower(1, 4);
        let f2 = tw.sub();
        let (a, b) = (f2.zero(), f2.one());
        let m = Mobius::new_c1(f2, a, b, a).unwrap();
        let fast = enum_invariant_order2(&tw, a, b).unwrap();
        let mut brute = Vec::new();
        for q in all_monic(f2, 8) {
            if q.eval(m.a()).is_zero() {
                continue;
            }
            if is_irreducible(&q).unwrap() && check_invariance(&q, &m).unwrap().is_some() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(fast, brute);
        assert_eq!(fast.len(), 2);
    }

    #[test]
    fn two_prime_strata_degree_12_over_f2() {
        // Relative degree 6 = 2·3 over GF(2) for x ↦ 1/x: five invariant
        // irreducible polynomials of degree 12.
        let tw = tower(1, 6);
        let f2 = tw.sub();
        let (a, b) = (f2.zero(), f2.one());
        let m = Mobius::new_c1(f2, a, b, a).unwrap();
        let fast = enum_invariant_order2(&tw, a, b).unwrap();
        let mut brute = Vec::new();
        for q in all_monic(f2, 12) {
            if q.eval(m.a()).is_zero() {
                continue;
            }
            if check_invariance(&q, &m).unwrap().is_some() && is_irreducible(&q).unwrap() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(fast, brute);
        assert_eq!(fast.len(), 5);
    }

    #[test]
    fn unsupported_relative_degrees_are_refused() {
        let tw = tower(1, 12); // 12 = 2²·3
        let f2 = tw.sub();
        assert!(matches!(
            enum_invariant_order2(&tw, f2.zero(), f2.one()),
            Err(Error::UnsupportedS { s: 12, .. })
        ));
    }

    #[test]
    fn cubic_parameter_cosets_over_f16() {
        // Order-3 map with a = 1, d = g⁵ (a primitive cube root of unity, so
        // b = a² + ad + d² = 1 + g⁵ + g¹⁰ = 0 — checked below).
        let c = ctx(4);
        let (a, d) = (c.one(), c.gen_pow(5));
        let m = order3_matrix(c, a, d).unwrap();
        assert_eq!(m.order().unwrap(), 3);
        assert_eq!(m.b(), c.add(c.add(c.one(), c.gen_pow(5)), c.gen_pow(10)));
        let [t0, t1, t2] = t_sets_order3(c, a, d).unwrap();
        assert_eq!(t0.len(), 4);
        assert_eq!(t1.len(), 5);
        assert_eq!(t2.len(), 5);
        // Hand-checked coset contents for this map.
        let to_set = |exps: &[i64]| -> Vec<Fe> {
            let mut v: Vec<Fe> = exps
                .iter()
                .map(|&e| if e < 0 { c.zero() } else { c.gen_pow(e as u64) })
                .collect();
            v.sort();
            v
        };
        assert_eq!(t1.members(), to_set(&[0, 2, 7, 8, 13]).as_slice());
        assert_eq!(t2.members(), to_set(&[1, 4, 5, 6, 9]).as_slice());
        // Completeness: every monic invariant irreducible cubic over GF(16)
        // is in the family, and the family covers both cosets.
        let mut brute = Vec::new();
        for q in all_monic(c, 3) {
            if q.eval(m.a()).is_zero() {
                continue;
            }
            if is_irreducible(&q).unwrap() && check_invariance(&q, &m).unwrap().is_some() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        let mut family: Vec<Poly> = t1
            .members()
            .iter()
            .chain(t2.members())
            .map(|&k| invariant_cubic(c, a, d, k))
            .collect();
        family.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(family, brute);
    }

    #[test]
    fn classify_covers_every_parameter_value() {
        let c = ctx(4);
        let (a, d) = (c.one(), c.gen_pow(5));
        let [t0, t1, t2] = t_sets_order3(c, a, d).unwrap();
        let mut counts = (0u32, 0u32, 0u32); // split, triple, irreducible
        for k in c.elements() {
            let cl = classify_cubic(c, a, d, k).unwrap();
            match cl.root_count {
                CubicRootCount::ThreeInField => {
                    counts.0 += 1;
                    assert_eq!(cl.coset, Some(0));
                    assert!(t0.contains(k));
                    assert_eq!(cl.roots.len(), 3);
                    for &r in &cl.roots {
                        assert!(cl.cubic.eval(r).is_zero());
                    }
                    assert!(cl.direction.is_none());
                }
                CubicRootCount::TripleRoot => {
                    counts.1 += 1;
                    assert_eq!(cl.coset, None);
                    assert_eq!(cl.roots, vec![k]);
                    assert!(!t0.contains(k) && !t1.contains(k) && !t2.contains(k));
                }
                CubicRootCount::Irreducible => {
                    counts.2 += 1;
                    assert!(is_irreducible_oracle(&cl.cubic).unwrap());
                    let j = cl.coset.unwrap();
                    assert!(j == 1 || j == 2);
                    assert_eq!(t1.contains(k), j == 1);
                    assert_eq!(t2.contains(k), j == 2);
                    assert!(cl.direction.is_some());
                }
            }
        }
        assert_eq!(counts, (4, 2, 10));
        // Directions are constant on each coset and differ between them.
        let dir_of = |k: Fe| classify_cubic(c, a, d, k).unwrap().direction.unwrap();
        let d1 = dir_of(t1.members()[0]);
        let d2 = dir_of(t2.members()[0]);
        assert_ne!(d1, d2);
        assert!(t1.members().iter().all(|&k| dir_of(k) == d1));
        assert!(t2.members().iter().all(|&k| dir_of(k) == d2));
    }

    #[test]
    fn cube_roots_of_unity_are_required() {
        let c = ctx(3); // 3 ∤ 7
        assert!(matches!(
            t_sets_order3(c, c.one(), c.generator()),
            Err(Error::NoCubeRootOfUnity { q: 8 })
        ));
        let c16 = ctx(4);
        assert!(matches!(
            t_sets_order3(c16, c16.one(), c16.one()),
            Err(Error::DegenerateMatrix { .. })
        ));
    }

    #[test]
    fn degree_6_enumeration_over_f8_via_even_extension() {
        // 3 ∤ 8 − 1, so there are no invariant cubics over GF(8) itself, but
        // GF(64) has cube roots of unity and the degree-6 enumeration works.
        let tw = tower(3, 2);
        let f8 = tw.sub();
        let (a, d) = (f8.one(), f8.generator());
        let m = order3_matrix(f8, a, d).unwrap();
        assert_eq!(m.order().unwrap(), 3);
        let fast = enum_invariant_order3(&tw, a, d).unwrap();
        // Ground truth by scanning every monic sextic over GF(8) is 8⁶ ≈
        // 262k candidates; the invariance check prunes almost everything
        // cheaply before the irreducibility test runs.
        let mut brute = Vec::new();
        for q in all_monic(f8, 6) {
            if q.eval(m.a()).is_zero() {
                continue;
            }
            if check_invariance(&q, &m).unwrap().is_some() && is_irreducible(&q).unwrap() {
                brute.push(q);
            }
        }
        brute.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(fast, brute);
        assert!(!fast.is_empty());
    }

    #[test]
    fn orbit_polynomial_agrees_with_the_enumerated_family() {
        // The enumeration works with parameters in GF(4²), but the roots of
        // the resulting quartics live one level up, in GF(4⁴).
        let tw = tower(2, 2);
        let f4 = tw.sub();
        let (a, b) = (f4.generator(), f4.one());
        let m = Mobius::new_c1(f4, a, b, a).unwrap();
        let roots_tower = tower(2, 4);
        for p in enum_invariant_order2(&tw, a, b).unwrap() {
            let up = embed_poly(&roots_tower, &p);
            let roots = roots_in_ctx(&up).unwrap();
            assert_eq!(roots.len(), 4);
            let orb = orbit_polynomial(&roots_tower, &m, roots[0]).unwrap();
            assert_eq!(orb.poly, p);
            assert_eq!(orb.roots, roots);
        }
    }

    #[test]
    fn orbit_polynomial_rejects_fixed_seeds() {
        let tw = tower(2, 2);
        let f4 = tw.sub();
        let (a, b) = (f4.generator(), f4.one());
        let m = Mobius::new_c1(f4, a, b, a).unwrap();
        let fixed = tw.sup().sqrt(tw.embed(b)); // the involution fixes √b
        assert!(matches!(
            orbit_polynomial(&tw, &m, fixed),
            Err(Error::FixedBeta)
        ));
    }

    #[test]
    fn h_factorization_for_the_f8_involution() {
        // a = 1, b = 0: h = x⁹ + x⁸ + x = x · Π_{k∈T} (x² + kx + k).
        let tw = tower(3, 1);
        let c = tw.sub();
        let m = Mobius::new_c1(c, c.one(), c.zero(), c.one()).unwrap();
        let f = factor_h(&tw, &m, FrobeniusDirection::Map).unwrap();
        assert_eq!(f.order, 2);
        assert_eq!(f.h, parse_poly(c, "x^9 + x^8 + x").unwrap());
        assert_eq!(f.linear_factors, vec![Poly::x(c)]);
        assert_eq!(f.invariant_factors.len(), 4);
        let t = t_set_order2(c, c.one(), c.zero()).unwrap();
        for g in &f.invariant_factors {
            assert!(t.contains(g.coeff(1)));
        }
    }

    #[test]
    fn h_factorization_over_an_extension_field() {
        // The same involution read over GF(q²): h has degree q² + 1 and the
        // parameter set is taken in the extension.
        let tw = tower(2, 2);
        let f4 = tw.sub();
        let m = Mobius::new_c1(f4, f4.generator(), f4.one(), f4.generator()).unwrap();
        let f = factor_h(&tw, &m, FrobeniusDirection::Map).unwrap();
        assert_eq!(f.h.degree(), Some(17));
        assert_eq!(f.linear_factors.len(), 1);
        assert_eq!(f.invariant_factors.len(), 8);
    }

    #[test]
    fn h_factorizations_for_both_order_3_directions() {
        let tw = tower(4, 1);
        let c = tw.sub();
        let (a, d) = (c.one(), c.gen_pow(5));
        let m = order3_matrix(c, a, d).unwrap();
        let fwd = factor_h(&tw, &m, FrobeniusDirection::Map).unwrap();
        let bwd = factor_h(&tw, &m, FrobeniusDirection::MapSquared).unwrap();
        for f in [&fwd, &bwd] {
            assert_eq!(f.order, 3);
            assert_eq!(f.h.degree(), Some(17));
            assert_eq!(f.linear_factors.len(), 2);
            assert_eq!(f.invariant_factors.len(), 5);
        }
        // Same fixed points, disjoint cubic cosets, and together they cover
        // the whole irreducible family.
        assert_eq!(fwd.linear_factors, bwd.linear_factors);
        let mut all: Vec<Poly> = fwd
            .invariant_factors
            .iter()
            .chain(&bwd.invariant_factors)
            .cloned()
            .collect();
        all.sort_by(|x, y| x.canonical_cmp(y));
        all.dedup();
        assert_eq!(all.len(), 10);
        let [_, t1, t2] = t_sets_order3(c, a, d).unwrap();
        let mut family: Vec<Poly> = t1
            .members()
            .iter()
            .chain(t2.members())
            .map(|&k| invariant_cubic(c, a, d, k))
            .collect();
        family.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(all, family);
        // The forward direction is the one whose factors put the Frobenius
        // on the same side as the map.
        for g in &fwd.invariant_factors {
            assert_eq!(cubic_direction(g, a, d), FrobeniusDirection::Map);
        }
        for g in &bwd.invariant_factors {
            assert_eq!(cubic_direction(g, a, d), FrobeniusDirection::MapSquared);
        }
    }

    #[test]
    fn h_factorization_for_a_prime_order_beyond_closed_forms() {
        // x ↦ (g·x)/(x + 1) over GF(8) has order 7 (eigenvalue ratio g);
        // the non-fixed part of h splits into one invariant septic.
        let tw = tower(3, 1);
        let c = tw.sub();
        let m = Mobius::new_c1(c, c.generator(), c.zero(), c.one()).unwrap();
        assert_eq!(m.order().unwrap(), 7);
        let f = factor_h(&tw, &m, FrobeniusDirection::Map).unwrap();
        assert_eq!(f.linear_factors.len(), 2);
        assert_eq!(f.invariant_factors.len(), 1);
        assert_eq!(f.invariant_factors[0].degree(), Some(7));
        assert!(is_irreducible(&f.invariant_factors[0]).unwrap());
    }

    #[test]
    fn factor_h_rejects_bad_shapes() {
        let tw = tower(3, 1);
        let c = tw.sub();
        let m = Mobius::new_c1(c, c.one(), c.zero(), c.one()).unwrap();
        assert!(matches!(
            factor_h(&tw, &m, FrobeniusDirection::MapSquared),
            Err(Error::UnsupportedOrder { l: 2 })
        ));
        let aff = Mobius::affine(c, c.generator(), c.zero()).unwrap();
        assert!(matches!(
            factor_h(&tw, &aff, FrobeniusDirection::Map),
            Err(Error::AffineMatrix)
        ));
        // Identity has order 1 — not prime.
        let id_frac = Mobius::new_c1(c, c.zero(), c.one(), c.zero()).unwrap(); // x ↦ 1/x, order 2: fine
        assert!(factor_h(&tw, &id_frac, FrobeniusDirection::Map).is_ok());
        // A composite-order fractional map must be refused: find one.
        let mut found = None;
        'outer: for a in c.elements() {
            for b in c.elements() {
                for d in c.elements() {
                    if c.add(c.mul(a, d), b).is_zero() {
                        continue;
                    }
                    let cand = Mobius::new_c1(c, a, b, d).unwrap();
                    let ord = cand.order().unwrap();
                    if ord > 3 && (ord % 2 == 0 || ord % 3 == 0) {
                        found = Some((cand, ord));
                        break 'outer;
                    }
                }
            }
        }
        let (composite, _) = found.expect("PGL₂(8) has composite-order elements");
        assert!(matches!(
            factor_h(&tw, &composite, FrobeniusDirection::Map),
            Err(Error::UnsupportedOrder { .. })
        ));
    }
}
