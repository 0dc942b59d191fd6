//! The projective line P¹(GF(2^m)) and its Möbius transformations.
//!
//! A Möbius map x ↦ (ax + b)/(cx + d) with nonzero determinant acts on the
//! projective line over the context field. Every map is kept in a normalized
//! matrix form with c ∈ {0, 1}:
//!
//! * c = 1 — the genuinely fractional maps, stored as ((a, b), (1, d));
//! * c = 0 — affine maps, normalized to d = 1, i.e. x ↦ ax + b.
//!
//! Projective equality then coincides with structural equality, which keeps
//! order computation and orbit walks free of scalar-ambiguity bookkeeping.
//!
//! The enumeration entry point lists all maps of a prescribed order (2 or 3)
//! in the fractional family, optionally restricted to the classical
//! one-parameter subfamilies (vanishing a, d, or b entry).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2e::{Fe, FieldCtx, TowerEmbedding, ENUM_CAP};

/// A point of the projective line: a field element or the point at infinity.
///
/// The derived order places all finite points (by encoding) before infinity,
/// which is the canonical support order used throughout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ProjPoint {
    Finite(Fe),
    Infinity,
}

impl ProjPoint {
    /// The finite value, if any.
    pub fn finite(self) -> Option<Fe> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }
}

/// Formats a point in generator-power notation (`0`, `1`, `g^k`, or `inf`).
pub fn format_point(ctx: FieldCtx, p: ProjPoint) -> String {
    match p {
        ProjPoint::Finite(x) => ctx.format_elem(x),
        ProjPoint::Infinity => "inf".to_string(),
    }
}

/// Parses a point in the format produced by [`format_point`].
pub fn parse_point(ctx: FieldCtx, s: &str) -> Result<ProjPoint> {
    match s.trim() {
        "inf" => Ok(ProjPoint::Infinity),
        t => Ok(ProjPoint::Finite(ctx.parse_elem(t)?)),
    }
}

/// A nonsingular Möbius transformation in normalized form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mobius {
    ctx: FieldCtx,
    a: Fe,
    b: Fe,
    d: Fe,
    c_is_one: bool,
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mobius({})", self.format())
    }
}

impl Mobius {
    /// Builds a map from arbitrary matrix entries, normalizing the bottom row
    /// so that c ∈ {0, 1}. Fails when the determinant ad − bc vanishes.
    pub fn new(ctx: FieldCtx, a: Fe, b: Fe, c: Fe, d: Fe) -> Result<Mobius> {
        for x in [a, b, c, d] {
            assert!(ctx.owns(x), "matrix entry from a different field context");
        }
        let det = ctx.add(ctx.mul(a, d), ctx.mul(b, c));
        if det.is_zero() {
            return Err(Error::DegenerateMatrix {
                a: ctx.format_elem(a),
                b: ctx.format_elem(b),
                c: ctx.format_elem(c),
                d: ctx.format_elem(d),
            });
        }
        if c.is_zero() {
            // Affine: scale to d = 1.
            let dinv = ctx.inv(d).expect("det nonzero forces d nonzero when c = 0");
            Ok(Mobius {
                ctx,
                a: ctx.mul(a, dinv),
                b: ctx.mul(b, dinv),
                d: ctx.one(),
                c_is_one: false,
            })
        } else {
            let cinv = ctx.inv(c).expect("c nonzero");
            Ok(Mobius {
                ctx,
                a: ctx.mul(a, cinv),
                b: ctx.mul(b, cinv),
                d: ctx.mul(d, cinv),
                c_is_one: true,
            })
        }
    }

    /// The fractional map ((a, b), (1, d)); fails when ad = b.
    pub fn new_c1(ctx: FieldCtx, a: Fe, b: Fe, d: Fe) -> Result<Mobius> {
        Mobius::new(ctx, a, b, ctx.one(), d)
    }

    /// The affine map x ↦ ax + b; fails when a = 0.
    pub fn affine(ctx: FieldCtx, a: Fe, b: Fe) -> Result<Mobius> {
        Mobius::new(ctx, a, b, ctx.zero(), ctx.one())
    }

    /// The identity map.
    pub fn identity(ctx: FieldCtx) -> Mobius {
        Mobius::affine(ctx, ctx.one(), ctx.zero()).expect("identity is nonsingular")
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    pub fn b(&self) -> Fe {
        self.b
    }

    /// The normalized c entry: 0 or 1.
    pub fn c(&self) -> Fe {
        if self.c_is_one {
            self.ctx.one()
        } else {
            self.ctx.zero()
        }
    }

    pub fn d(&self) -> Fe {
        self.d
    }

    pub fn is_affine(&self) -> bool {
        !self.c_is_one
    }

    pub fn is_identity(&self) -> bool {
        *self == Mobius::identity(self.ctx)
    }

    /// `[[a,b],[c,d]]` with entries in generator-power notation.
    pub fn format(&self) -> String {
        format!(
            "[[{},{}],[{},{}]]",
            self.ctx.format_elem(self.a),
            self.ctx.format_elem(self.b),
            self.ctx.format_elem(self.c()),
            self.ctx.format_elem(self.d)
        )
    }

    /// Applies the map to a point of the projective line.
    pub fn apply(&self, p: ProjPoint) -> ProjPoint {
        let ctx = self.ctx;
        match (self.c_is_one, p) {
            (false, ProjPoint::Infinity) => ProjPoint::Infinity,
            (false, ProjPoint::Finite(x)) => {
                ProjPoint::Finite(ctx.add(ctx.mul(self.a, x), self.b))
            }
            (true, ProjPoint::Infinity) => ProjPoint::Finite(self.a),
            (true, ProjPoint::Finite(x)) => {
                let denom = ctx.add(x, self.d);
                if denom.is_zero() {
                    ProjPoint::Infinity
                } else {
                    let num = ctx.add(ctx.mul(self.a, x), self.b);
                    ProjPoint::Finite(ctx.div(num, denom).expect("denominator nonzero"))
                }
            }
        }
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Mobius) -> Mobius {
        assert!(self.ctx == other.ctx, "Möbius context mismatch");
        let ctx = self.ctx;
        let (a1, b1, c1, d1) = (self.a, self.b, self.c(), self.d);
        let (a2, b2, c2, d2) = (other.a, other.b, other.c(), other.d);
        let a = ctx.add(ctx.mul(a1, a2), ctx.mul(b1, c2));
        let b = ctx.add(ctx.mul(a1, b2), ctx.mul(b1, d2));
        let c = ctx.add(ctx.mul(c1, a2), ctx.mul(d1, c2));
        let d = ctx.add(ctx.mul(c1, b2), ctx.mul(d1, d2));
        Mobius::new(ctx, a, b, c, d).expect("product of nonsingular matrices is nonsingular")
    }

    /// The inverse map — the adjugate ((d, b), (c, a)) in characteristic 2.
    pub fn inverse(&self) -> Mobius {
        Mobius::new(self.ctx, self.d, self.b, self.c(), self.a)
            .expect("adjugate of a nonsingular matrix is nonsingular")
    }

    /// The order of the map in the projective group. Orders of elements of
    /// PGL₂(GF(q)) never exceed q + 1, so exceeding that bound is reported
    /// as [`Error::OrderNotFound`] rather than looping.
    pub fn order(&self) -> Result<u64> {
        let cap = self.ctx.size() + 1;
        let mut acc = *self;
        let id = Mobius::identity(self.ctx);
        for k in 1..=cap {
            if acc == id {
                return Ok(k);
            }
            acc = acc.compose(self);
        }
        Err(Error::OrderNotFound)
    }

    /// The fixed points of the map on the projective line, ascending.
    pub fn fixed_points(&self) -> Vec<ProjPoint> {
        let ctx = self.ctx;
        let mut out = Vec::new();
        if !self.c_is_one {
            // ax + b = x: (a + 1)x = b.
            let a1 = ctx.add(self.a, ctx.one());
            if !a1.is_zero() {
                out.push(ProjPoint::Finite(ctx.div(self.b, a1).expect("a + 1 nonzero")));
            }
            out.push(ProjPoint::Infinity);
        } else {
            // (ax + b)/(x + d) = x: x² + (a + d)x + b = 0.
            let p = ctx.add(self.a, self.d);
            if p.is_zero() {
                out.push(ProjPoint::Finite(ctx.sqrt(self.b)));
            } else {
                // Substitute x = p·y: y² + y = b/p².
                let rhs = ctx.div(self.b, ctx.square(p)).expect("p nonzero");
                if let Some((y0, y1)) = ctx.solve_artin_schreier(rhs) {
                    out.push(ProjPoint::Finite(ctx.mul(p, y0)));
                    out.push(ProjPoint::Finite(ctx.mul(p, y1)));
                }
            }
        }
        out.sort();
        out
    }

    /// Decomposes a point set that is closed under the map into orbits.
    ///
    /// Each orbit is listed starting from its smallest point and follows
    /// successive images; orbits are sorted by their smallest point. Fails
    /// with [`Error::DuplicatePoint`] on repeated input points and
    /// [`Error::DomainNotClosed`] when an image escapes the set.
    pub fn orbits(&self, points: &[ProjPoint]) -> Result<Vec<Vec<ProjPoint>>> {
        let ctx = self.ctx;
        let mut set = BTreeSet::new();
        for &p in points {
            if !set.insert(p) {
                return Err(Error::DuplicatePoint {
                    point: format_point(ctx, p),
                });
            }
        }
        let mut visited = BTreeSet::new();
        let mut orbits = Vec::new();
        for &start in &set {
            if visited.contains(&start) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = start;
            loop {
                orbit.push(cur);
                visited.insert(cur);
                let img = self.apply(cur);
                if !set.contains(&img) {
                    return Err(Error::DomainNotClosed {
                        point: format_point(ctx, cur),
                        image: format_point(ctx, img),
                    });
                }
                if img == start {
                    break;
                }
                // A Möbius map is injective, so revisiting any non-start
                // point is impossible; the walk must return to `start`.
                cur = img;
            }
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// The permutation induced on an ordered support: `perm[i]` is the index
    /// holding the image of `support[i]`.
    pub fn induced_permutation(&self, support: &[ProjPoint]) -> Result<Vec<usize>> {
        let ctx = self.ctx;
        let mut index = std::collections::HashMap::with_capacity(support.len());
        for (i, &p) in support.iter().enumerate() {
            if index.insert(p, i).is_some() {
                return Err(Error::DuplicatePoint {
                    point: format_point(ctx, p),
                });
            }
        }
        support
            .iter()
            .map(|&p| {
                let img = self.apply(p);
                index.get(&img).copied().ok_or(Error::DomainNotClosed {
                    point: format_point(ctx, p),
                    image: format_point(ctx, img),
                })
            })
            .collect()
    }
}

/// Transports a Möbius map up a field tower by embedding its matrix entries.
/// The normalized form (fractional vs affine) is preserved.
pub fn embed_mobius(tower: &TowerEmbedding, m: &Mobius) -> Mobius {
    assert!(m.ctx() == tower.sub(), "embed_mobius: map is not over the subfield");
    Mobius::new(
        tower.sup(),
        tower.embed(m.a()),
        tower.embed(m.b()),
        tower.embed(m.c()),
        tower.embed(m.d()),
    )
    .expect("embeddings preserve nonsingularity")
}

/// Parses `[[a,b],[c,d]]` with entries in generator-power notation.
pub fn parse_mobius(ctx: FieldCtx, s: &str) -> Result<Mobius> {
    let bad = |why: &str| Error::Parse {
        what: "matrix",
        input: s.to_string(),
        why: why.to_string(),
    };
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix("[[")
        .and_then(|u| u.strip_suffix("]]"))
        .ok_or_else(|| bad("expected [[a,b],[c,d]]"))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(bad("expected two rows"));
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(bad("expected two entries per row"));
        }
        for col in cols {
            entries.push(ctx.parse_elem(col)?);
        }
    }
    Mobius::new(ctx, entries[0], entries[1], entries[2], entries[3])
}

/// The whole projective line, finite points ascending and infinity last.
/// Refuses fields past the desk-scale enumeration cap.
pub fn projective_line(ctx: FieldCtx) -> Result<Vec<ProjPoint>> {
    let n = ctx.size() + 1;
    if n > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "projective-line enumeration",
            amount: n,
            cap: ENUM_CAP,
        });
    }
    let mut out: Vec<ProjPoint> = ctx.elements().map(ProjPoint::Finite).collect();
    out.push(ProjPoint::Infinity);
    Ok(out)
}

/// Restriction of the order-ℓ enumeration to a classical subfamily.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyFilter {
    /// Every fractional map of the requested order.
    All,
    /// Maps with a = 0 (x ↦ b/(x + d) shape).
    AZero,
    /// Maps with d = 0 ((ax + b)/x shape).
    DZero,
    /// Maps with b = 0 (ax/(x + d) shape).
    BZero,
}

/// Enumerates the fractional (c = 1) Möbius maps of exact order `l` ∈ {2, 3},
/// optionally restricted by `filter`, sorted by (a, d, b) encodings.
///
/// Order 2 is the family ((a, b), (1, a)) with b ≠ a² — there are q(q − 1) of
/// them. Order 3 is the family ((a, a² + ad + d²), (1, d)) with a ≠ d — again
/// q(q − 1) maps. The b = 0 restriction of the order-3 family exists exactly
/// when GF(q) contains a primitive cube root of unity, i.e. 3 | q − 1.
pub fn enum_order_l(ctx: FieldCtx, l: u32, filter: FamilyFilter) -> Result<Vec<Mobius>> {
    if l != 2 && l != 3 {
        return Err(Error::UnsupportedOrder { l });
    }
    let q = ctx.size();
    let family = q.saturating_mul(q - 1);
    if family > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "order-l map enumeration",
            amount: family,
            cap: ENUM_CAP,
        });
    }
    if l == 3 && filter == FamilyFilter::BZero && (q - 1) % 3 != 0 {
        return Err(Error::NoCubeRootOfUnity { q });
    }
    let mut out = Vec::new();
    for a in ctx.elements() {
        if filter == FamilyFilter::AZero && !a.is_zero() {
            continue;
        }
        for d in ctx.elements() {
            if filter == FamilyFilter::DZero && !d.is_zero() {
                continue;
            }
            let m = match l {
                2 => {
                    if d != a {
                        continue;
                    }
                    let b_forbidden = ctx.square(a);
                    match filter {
                        FamilyFilter::BZero => {
                            if b_forbidden.is_zero() {
                                continue; // b = 0 would be singular
                            }
                            vec![ctx.zero()]
                        }
                        _ => ctx.elements().filter(|&b| b != b_forbidden).collect(),
                    }
                }
                _ => {
                    if a == d {
                        continue;
                    }
                    let b = ctx.add(ctx.add(ctx.square(a), ctx.mul(a, d)), ctx.square(d));
                    if filter == FamilyFilter::BZero && !b.is_zero() {
                        continue;
                    }
                    vec![b]
                }
            };
            for b in m {
                out.push(Mobius::new_c1(ctx, a, b, d).expect("family construction is nonsingular"));
            }
        }
    }
    out.sort_by_key(|m| (m.a().bits(), m.d().bits(), m.b().bits()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2e::ModulusTable;

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::from_table(ModulusTable::builtin(), m).unwrap()
    }

    #[test]
    fn normalization_scales_the_bottom_row() {
        let c = ctx(3);
        let m = Mobius::new(c, c.gen_pow(4), c.one(), c.gen_pow(2), c.gen_pow(4)).unwrap();
        assert_eq!(m.c(), c.one());
        assert_eq!(m.a(), c.gen_pow(2)); // g^4 / g^2
        assert_eq!(m.d(), c.gen_pow(2)); // g^4 / g^2
        let aff = Mobius::new(c, c.gen_pow(3), c.one(), c.zero(), c.gen_pow(1)).unwrap();
        assert!(aff.is_affine());
        assert_eq!(aff.a(), c.gen_pow(2));
        assert_eq!(aff.d(), c.one());
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let c = ctx(3);
        // det = g·g − g²·1 = 0.
        let err = Mobius::new(c, c.gen_pow(1), c.gen_pow(2), c.one(), c.gen_pow(1)).unwrap_err();
        assert!(matches!(err, Error::DegenerateMatrix { .. }));
        assert!(Mobius::affine(c, c.zero(), c.one()).is_err());
    }

    #[test]
    fn apply_respects_composition_on_the_whole_line() {
        let c = ctx(4);
        let m1 = Mobius::new_c1(c, c.gen_pow(3), c.gen_pow(7), c.gen_pow(11)).unwrap();
        let m2 = Mobius::affine(c, c.gen_pow(5), c.one()).unwrap();
        let comp = m1.compose(&m2);
        for p in projective_line(c).unwrap() {
            assert_eq!(comp.apply(p), m1.apply(m2.apply(p)));
        }
    }

    #[test]
    fn inverse_composes_to_the_identity() {
        let c = ctx(4);
        for m in [
            Mobius::new_c1(c, c.gen_pow(3), c.gen_pow(7), c.gen_pow(11)).unwrap(),
            Mobius::affine(c, c.gen_pow(5), c.gen_pow(2)).unwrap(),
            Mobius::new_c1(c, c.zero(), c.one(), c.zero()).unwrap(), // x ↦ 1/x
        ] {
            assert!(m.compose(&m.inverse()).is_identity());
            assert!(m.inverse().compose(&m).is_identity());
            for p in projective_line(c).unwrap() {
                assert_eq!(m.inverse().apply(m.apply(p)), p);
            }
        }
    }

    #[test]
    fn orders_of_known_maps() {
        let c = ctx(3);
        assert_eq!(Mobius::identity(c).order().unwrap(), 1);
        assert_eq!(Mobius::affine(c, c.one(), c.one()).unwrap().order().unwrap(), 2);
        // x ↦ gx has the order of g in the unit group.
        assert_eq!(
            Mobius::affine(c, c.generator(), c.zero()).unwrap().order().unwrap(),
            7
        );
        // x ↦ 1/x.
        assert_eq!(
            Mobius::new_c1(c, c.zero(), c.one(), c.zero()).unwrap().order().unwrap(),
            2
        );
    }

    #[test]
    fn involutions_have_one_fixed_point_with_square_root_of_b() {
        let c = ctx(5);
        let a = c.gen_pow(7);
        let b = c.gen_pow(12);
        let m = Mobius::new_c1(c, a, b, a).unwrap();
        assert_eq!(m.order().unwrap(), 2);
        let fp = m.fixed_points();
        assert_eq!(fp, vec![ProjPoint::Finite(c.sqrt(b))]);
        for p in fp {
            assert_eq!(m.apply(p), p);
        }
    }

    #[test]
    fn affine_fixed_points() {
        let c = ctx(3);
        let translation = Mobius::affine(c, c.one(), c.one()).unwrap();
        assert_eq!(translation.fixed_points(), vec![ProjPoint::Infinity]);
        let scaling = Mobius::affine(c, c.generator(), c.zero()).unwrap();
        assert_eq!(
            scaling.fixed_points(),
            vec![ProjPoint::Finite(c.zero()), ProjPoint::Infinity]
        );
    }

    #[test]
    fn fixed_points_are_exactly_the_points_the_map_fixes() {
        for m_deg in [3u32, 4] {
            let c = ctx(m_deg);
            for maps in [
                enum_order_l(c, 2, FamilyFilter::All).unwrap(),
                enum_order_l(c, 3, FamilyFilter::All).unwrap(),
            ] {
                for m in maps {
                    let brute: Vec<ProjPoint> = projective_line(c)
                        .unwrap()
                        .into_iter()
                        .filter(|&p| m.apply(p) == p)
                        .collect();
                    assert_eq!(m.fixed_points(), brute, "{}", m.format());
                }
            }
        }
    }

    #[test]
    fn inversion_orbits_on_the_line_over_f4() {
        let c = ctx(2);
        let m = Mobius::new_c1(c, c.zero(), c.one(), c.zero()).unwrap(); // x ↦ 1/x
        let orbits = m.orbits(&projective_line(c).unwrap()).unwrap();
        let f = |k: u32| ProjPoint::Finite(c.gen_pow(k as u64));
        assert_eq!(
            orbits,
            vec![
                vec![ProjPoint::Finite(c.zero()), ProjPoint::Infinity],
                vec![f(0)],
                vec![f(1), f(2)],
            ]
        );
    }

    #[test]
    fn orbit_errors_are_reported() {
        let c = ctx(2);
        let m = Mobius::affine(c, c.one(), c.one()).unwrap(); // x ↦ x + 1
        let zero = ProjPoint::Finite(c.zero());
        let err = m.orbits(&[zero]).unwrap_err();
        assert!(matches!(err, Error::DomainNotClosed { .. }));
        let err = m.orbits(&[zero, zero]).unwrap_err();
        assert!(matches!(err, Error::DuplicatePoint { .. }));
    }

    #[test]
    fn induced_permutation_tracks_images() {
        let c = ctx(3);
        let m = Mobius::new_c1(c, c.gen_pow(2), c.gen_pow(5), c.gen_pow(2)).unwrap();
        let line = projective_line(c).unwrap();
        let perm = m.induced_permutation(&line).unwrap();
        let mut seen = vec![false; line.len()];
        for (i, &j) in perm.iter().enumerate() {
            assert_eq!(line[j], m.apply(line[i]));
            assert!(!seen[j], "not a permutation");
            seen[j] = true;
        }
        // Restriction to a non-closed subset fails.
        let err = m.induced_permutation(&line[0..2]).unwrap_err();
        assert!(matches!(err, Error::DomainNotClosed { .. }));
    }

    #[test]
    fn order_2_family_count_and_orders() {
        let c = ctx(3);
        let maps = enum_order_l(c, 2, FamilyFilter::All).unwrap();
        assert_eq!(maps.len() as u64, 8 * 7);
        for m in &maps {
            assert_eq!(m.order().unwrap(), 2);
            assert_eq!(m.a(), m.d());
        }
        // Sorted and duplicate-free.
        let mut dedup = maps.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), maps.len());
    }

    #[test]
    fn order_3_family_count_and_orders() {
        let c = ctx(4);
        let maps = enum_order_l(c, 3, FamilyFilter::All).unwrap();
        assert_eq!(maps.len() as u64, 16 * 15);
        for m in &maps {
            assert_eq!(m.order().unwrap(), 3);
        }
    }

    #[test]
    fn order_3_subfamilies_have_the_classical_counts() {
        let c = ctx(4);
        let q = 16u64;
        assert_eq!(
            enum_order_l(c, 3, FamilyFilter::AZero).unwrap().len() as u64,
            q - 1
        );
        assert_eq!(
            enum_order_l(c, 3, FamilyFilter::DZero).unwrap().len() as u64,
            q - 1
        );
        let bzero = enum_order_l(c, 3, FamilyFilter::BZero).unwrap();
        assert_eq!(bzero.len() as u64, 2 * (q - 1));
        for m in &bzero {
            assert!(m.b().is_zero());
            assert_eq!(m.order().unwrap(), 3);
        }
    }

    #[test]
    fn order_3_b_zero_needs_a_cube_root_of_unity() {
        let c = ctx(3); // 3 does not divide 7
        assert!(matches!(
            enum_order_l(c, 3, FamilyFilter::BZero),
            Err(Error::NoCubeRootOfUnity { q: 8 })
        ));
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        let c = ctx(3);
        assert!(matches!(
            enum_order_l(c, 5, FamilyFilter::All),
            Err(Error::UnsupportedOrder { l: 5 })
        ));
    }

    #[test]
    fn enumeration_matches_brute_force_over_f8() {
        // Ground truth: scan all (a, b, d) with ad ≠ b and test the order.
        let c = ctx(3);
        for l in [2u32, 3] {
            let fast = enum_order_l(c, l, FamilyFilter::All).unwrap();
            let mut brute = Vec::new();
            for a in c.elements() {
                for b in c.elements() {
                    for d in c.elements() {
                        if ctx(3).add(c.mul(a, d), b).is_zero() {
                            continue;
                        }
                        let m = Mobius::new_c1(c, a, b, d).unwrap();
                        if m.order().unwrap() == l as u64 {
                            brute.push(m);
                        }
                    }
                }
            }
            brute.sort_by_key(|m| (m.a().bits(), m.d().bits(), m.b().bits()));
            assert_eq!(fast, brute, "order {l}");
        }
    }

    #[test]
    fn projective_line_is_ordered_with_infinity_last() {
        let c = ctx(3);
        let line = projective_line(c).unwrap();
        assert_eq!(line.len(), 9);
        assert_eq!(line[0], ProjPoint::Finite(c.zero()));
        assert_eq!(line[8], ProjPoint::Infinity);
        let mut sorted = line.clone();
        sorted.sort();
        assert_eq!(sorted, line);
    }

    #[test]
    fn embedding_a_map_commutes_with_embedding_points() {
        let table = ModulusTable::builtin();
        let f8 = ctx(3);
        let tower = TowerEmbedding::new(table, f8, 2).unwrap();
        let m = Mobius::new_c1(f8, f8.gen_pow(2), f8.gen_pow(5), f8.gen_pow(2)).unwrap();
        let up = embed_mobius(&tower, &m);
        assert!(!up.is_affine());
        for x in f8.elements() {
            let below = m.apply(ProjPoint::Finite(x));
            let above = up.apply(ProjPoint::Finite(tower.embed(x)));
            match (below, above) {
                (ProjPoint::Infinity, ProjPoint::Infinity) => {}
                (ProjPoint::Finite(y), ProjPoint::Finite(z)) => assert_eq!(tower.embed(y), z),
                _ => panic!("embedding broke the point at infinity"),
            }
        }
    }

    #[test]
    fn matrix_text_round_trips() {
        let c = ctx(5);
        let m = Mobius::new_c1(c, c.gen_pow(1), c.one(), c.gen_pow(1)).unwrap();
        assert_eq!(m.format(), "[[g^1,1],[1,g^1]]");
        assert_eq!(parse_mobius(c, &m.format()).unwrap(), m);
        assert_eq!(parse_mobius(c, "[[ g^1 , 1 ], [ 1 , g^1 ]]").unwrap(), m);
        assert!(parse_mobius(c, "[[1,2],[3]]").is_err());
        assert!(parse_mobius(c, "nonsense").is_err());
    }
}
