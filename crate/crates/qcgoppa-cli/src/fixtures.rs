//! Built-in reference constructions for `qcgoppa verify`.
//!
//! Each fixture rebuilds one reference construction from scratch — invariant
//! polynomial families, orbit decompositions, factorizations, and the codes
//! assembled from them — and compares every observable against values frozen
//! in this file. Most fixtures are coefficient-exact. Two of them (`ex4_8`,
//! `ex4_9`) check structure (orbit shapes, dimensions, quasi-cyclic layout,
//! minimum distance) by default and upgrade to coefficient-exact comparison
//! under `--strict`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use qcgoppa_core::codes::{
    build_code, min_distance_exhaustive, unit_group, BuiltCode, GoppaSpec, SupportSpec, Variant,
};
use qcgoppa_core::invariant::{
    check_invariance, classify_cubic, enum_invariant_order2, factor_h, order3_matrix,
    t_set_order2, t_sets_order3, FrobeniusDirection,
};
use qcgoppa_core::polyring::is_irreducible;
use qcgoppa_core::projline::{format_point, projective_line};
use qcgoppa_core::{Error, FieldCtx, ModulusTable, Mobius, Poly, ProjPoint, TowerEmbedding};

// ---------------------------------------------------------------------------
// Fixture identities
// ---------------------------------------------------------------------------

/// The seven named reference constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FixtureId {
    Ex3_10,
    Ex3_11,
    Ex3_12,
    Ex4_5,
    Ex4_6,
    Ex4_8,
    Ex4_9,
}

impl FixtureId {
    /// All fixtures, in the order `verify all` runs them.
    pub const ALL: [FixtureId; 7] = [
        FixtureId::Ex3_10,
        FixtureId::Ex3_11,
        FixtureId::Ex3_12,
        FixtureId::Ex4_5,
        FixtureId::Ex4_6,
        FixtureId::Ex4_8,
        FixtureId::Ex4_9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Ex3_10 => "ex3_10",
            FixtureId::Ex3_11 => "ex3_11",
            FixtureId::Ex3_12 => "ex3_12",
            FixtureId::Ex4_5 => "ex4_5",
            FixtureId::Ex4_6 => "ex4_6",
            FixtureId::Ex4_8 => "ex4_8",
            FixtureId::Ex4_9 => "ex4_9",
        }
    }

    pub fn parse(s: &str) -> Option<FixtureId> {
        FixtureId::ALL.iter().copied().find(|id| id.name() == s)
    }

    fn match_mode(self, strict: bool) -> &'static str {
        match self {
            FixtureId::Ex4_8 | FixtureId::Ex4_9 => {
                if strict {
                    "bit-exact (strict)"
                } else {
                    "structural"
                }
            }
            _ => "bit-exact",
        }
    }
}

// ---------------------------------------------------------------------------
// Outcome recording
// ---------------------------------------------------------------------------

/// One named check inside a fixture, with a human-readable detail line.
#[derive(Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything a fixture run produced.
#[derive(Serialize)]
pub struct FixtureOutcome {
    pub id: String,
    pub match_mode: String,
    pub assertions: Vec<Assertion>,
}

impl FixtureOutcome {
    pub fn pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }
}

struct Rec {
    assertions: Vec<Assertion>,
}

impl Rec {
    fn new() -> Rec {
        Rec { assertions: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, got: T, want: T) {
        let pass = got == want;
        let detail = if pass {
            format!("= {got}")
        } else {
            format!("expected {want}, got {got}")
        };
        self.check(name, pass, detail);
    }

    /// An unconditional record line (always passes).
    fn record(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.check(name, true, detail);
    }
}

/// Recomputes one fixture and records every comparison.
pub fn run_fixture(id: FixtureId, strict: bool) -> Result<FixtureOutcome, Error> {
    let mut rec = Rec::new();
    match id {
        FixtureId::Ex3_10 => ex3_10(&mut rec)?,
        FixtureId::Ex3_11 => ex3_11(&mut rec)?,
        FixtureId::Ex3_12 => ex3_12(&mut rec)?,
        FixtureId::Ex4_5 => ex4_5(&mut rec)?,
        FixtureId::Ex4_6 => ex4_6(&mut rec)?,
        FixtureId::Ex4_8 => ex4_8(&mut rec, strict)?,
        FixtureId::Ex4_9 => ex4_9(&mut rec, strict)?,
    }
    Ok(FixtureOutcome {
        id: id.name().to_string(),
        match_mode: id.match_mode(strict).to_string(),
        assertions: rec.assertions,
    })
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

/// Monic polynomial whose trailing coefficients are generator powers,
/// listed from the second-highest term down to the constant.
fn poly_from_exps(ctx: FieldCtx, exps_hi_to_lo: &[u64]) -> Poly {
    let deg = exps_hi_to_lo.len();
    let mut coeffs = vec![ctx.zero(); deg + 1];
    coeffs[deg] = ctx.one();
    for (i, &e) in exps_hi_to_lo.iter().enumerate() {
        coeffs[deg - 1 - i] = ctx.gen_pow(e);
    }
    Poly::from_coeffs(ctx, coeffs)
}

/// GF(2)[x] polynomial from a coefficient mask, bit i = coefficient of x^i.
fn gf2_poly(ctx: FieldCtx, mask: u32) -> Poly {
    let bits: Vec<u32> = (0..32).map(|i| (mask >> i) & 1).collect();
    Poly::from_bits(ctx, &bits)
}

fn sort_polys(mut v: Vec<Poly>) -> Vec<Poly> {
    v.sort_by(|x, y| x.canonical_cmp(y));
    v
}

fn poly_list_eq(rec: &mut Rec, name: &str, got: &[Poly], want: &[Poly]) {
    if got.len() != want.len() {
        rec.check(
            name,
            false,
            format!("expected {} polynomials, got {}", want.len(), got.len()),
        );
        return;
    }
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        if g != w {
            rec.check(
                name,
                false,
                format!("mismatch at sorted index {i}: expected {w}, got {g}"),
            );
            return;
        }
    }
    rec.check(name, true, format!("{} polynomials, coefficient-exact", got.len()));
}

fn all_irreducible(rec: &mut Rec, name: &str, polys: &[Poly]) -> Result<(), Error> {
    for g in polys {
        if !is_irreducible(g)? {
            rec.check(name, false, format!("{g} is reducible"));
            return Ok(());
        }
    }
    rec.check(name, true, format!("all {} irreducible", polys.len()));
    Ok(())
}

fn all_invariant(rec: &mut Rec, name: &str, polys: &[Poly], map: &Mobius) -> Result<(), Error> {
    for g in polys {
        if check_invariance(g, map)?.is_none() {
            rec.check(name, false, format!("{g} is not invariant under {}", map.format()));
            return Ok(());
        }
    }
    rec.check(name, true, format!("all {} invariant", polys.len()));
    Ok(())
}

/// Normalizes an orbit decomposition to a set of point-label sets, so the
/// comparison is independent of orbit order and of rotation within an orbit.
fn orbit_set(ctx: FieldCtx, orbits: &[Vec<ProjPoint>]) -> BTreeSet<BTreeSet<String>> {
    orbits
        .iter()
        .map(|orbit| orbit.iter().map(|&p| format_point(ctx, p)).collect())
        .collect()
}

fn expected_orbit_set(rows: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
    rows.iter()
        .map(|row| row.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn orbit_set_eq(
    rec: &mut Rec,
    name: &str,
    got: &BTreeSet<BTreeSet<String>>,
    want: &BTreeSet<BTreeSet<String>>,
) {
    if got == want {
        rec.check(name, true, format!("{} orbits, point-exact", got.len()));
        return;
    }
    let mut detail = String::new();
    if let Some(missing) = want.difference(got).next() {
        let _ = write!(
            detail,
            "expected orbit ({}) not produced",
            missing.iter().cloned().collect::<Vec<_>>().join(", ")
        );
    }
    if let Some(extra) = got.difference(want).next() {
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        let _ = write!(
            detail,
            "unexpected orbit ({})",
            extra.iter().cloned().collect::<Vec<_>>().join(", ")
        );
    }
    rec.check(name, false, detail);
}

fn word_weight(row: &[u64]) -> u32 {
    row.iter().map(|w| w.count_ones()).sum()
}

/// Structural soundness checks that every built code must satisfy:
/// generator rows lie in the kernel of the parity rows, rank-nullity is
/// exact, the dimension respects the parity-row lower bound, and (for the
/// subcode variants used here) every generator row has even weight.
fn code_invariants(rec: &mut Rec, label: &str, code: &BuiltCode) {
    let n = code.length();
    let gen = &code.generator;
    let ortho = (0..gen.n_rows()).all(|i| code.parity_bits.in_kernel(gen.row(i)));
    rec.check(
        format!("{label} parity orthogonality"),
        ortho,
        format!("{} generator rows against {} parity rows", gen.n_rows(), code.parity_bits.n_rows()),
    );
    rec.eq(
        format!("{label} rank-nullity"),
        code.dimension() + code.parity_bits.rank(),
        n,
    );
    rec.check(
        format!("{label} dimension lower bound"),
        code.dimension() + code.parity_bits.n_rows() >= n,
        format!(
            "dimension {} >= length {} - {} parity bit rows",
            code.dimension(),
            n,
            code.parity_bits.n_rows()
        ),
    );
    let even = (0..gen.n_rows()).all(|i| word_weight(gen.row(i)) % 2 == 0);
    rec.check(
        format!("{label} even-weight generator rows"),
        even,
        format!("{} rows", gen.n_rows()),
    );
}

fn check_code_shape(
    rec: &mut Rec,
    label: &str,
    code: &BuiltCode,
    length: usize,
    dimension: usize,
    qc: (usize, usize),
) {
    rec.eq(format!("{label} length"), code.length(), length);
    rec.eq(format!("{label} dimension"), code.dimension(), dimension);
    let got_qc = code.qc.as_ref().map(|b| (b.l, b.tau));
    rec.check(
        format!("{label} quasi-cyclic shape"),
        got_qc == Some(qc),
        match got_qc {
            Some((l, tau)) => format!("expected {} blocks of size {}, got {tau} blocks of size {l}", qc.1, qc.0),
            None => format!("expected {} blocks of size {}, got none", qc.1, qc.0),
        },
    );
    rec.check(
        format!("{label} automorphism"),
        code.automorphism_verified == Some(true),
        format!("verified = {:?}", code.automorphism_verified),
    );
}

fn exps_detail(set: &BTreeSet<i64>) -> String {
    let items: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

// ---------------------------------------------------------------------------
// ex3_10: quadratics over GF(8) fixed by x -> x/(x+1)
// ---------------------------------------------------------------------------

fn ex3_10(rec: &mut Rec) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let ctx = FieldCtx::from_table(table, 3)?;
    let map = Mobius::new_c1(ctx, ctx.one(), ctx.zero(), ctx.one())?;
    rec.eq("ex3_10 map order", map.order()?, 2);
    let tower = TowerEmbedding::identity(ctx);
    let got = sort_polys(enum_invariant_order2(&tower, map.a(), map.b())?);
    let want = sort_polys(vec![
        poly_from_exps(ctx, &[1, 1]),
        poly_from_exps(ctx, &[2, 2]),
        poly_from_exps(ctx, &[4, 4]),
        poly_from_exps(ctx, &[0, 0]),
    ]);
    rec.eq("ex3_10 family size", got.len(), 4);
    poly_list_eq(rec, "ex3_10 quadratics", &got, &want);
    all_irreducible(rec, "ex3_10 irreducibility", &got)?;
    all_invariant(rec, "ex3_10 invariance", &got, &map)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// ex3_11: degree-10 binary polynomials fixed by x -> x/(x+1)
// ---------------------------------------------------------------------------

fn ex3_11(rec: &mut Rec) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let ctx = FieldCtx::from_table(table, 1)?;
    let map = Mobius::new_c1(ctx, ctx.one(), ctx.zero(), ctx.one())?;
    let tower = TowerEmbedding::new(table, ctx, 5)?;
    let got = sort_polys(enum_invariant_order2(&tower, map.a(), map.b())?);
    let want = sort_polys(vec![
        gf2_poly(ctx, 1479),
        gf2_poly(ctx, 1927),
        gf2_poly(ctx, 1591),
    ]);
    rec.eq("ex3_11 family size", got.len(), 3);
    rec.check(
        "ex3_11 degrees",
        got.iter().all(|g| g.degree() == Some(10)),
        "all degree 10",
    );
    poly_list_eq(rec, "ex3_11 binary polynomials", &got, &want);
    all_irreducible(rec, "ex3_11 irreducibility", &got)?;
    all_invariant(rec, "ex3_11 invariance", &got, &map)?;

    // The parameters live in the degree-5 extension; exactly the ones outside
    // the base field produce the degree-10 products above.
    let big = tower.sup();
    let t = t_set_order2(big, big.one(), big.zero())?;
    let outside: Vec<_> = t
        .members()
        .iter()
        .copied()
        .filter(|k| k.bits() > 1)
        .collect();
    rec.eq("ex3_11 extension parameter count", outside.len(), 15);
    let got_exps: BTreeSet<i64> = outside
        .iter()
        .map(|&k| big.dlog(k).map_or(-1, |e| e as i64))
        .collect();
    let want_exps: BTreeSet<i64> =
        [5, 7, 9, 10, 11, 13, 14, 18, 19, 20, 21, 22, 25, 26, 28]
            .into_iter()
            .collect();
    rec.check(
        "ex3_11 extension parameter exponents",
        got_exps == want_exps,
        if got_exps == want_exps {
            format!("= {}", exps_detail(&got_exps))
        } else {
            format!(
                "expected {}, got {}",
                exps_detail(&want_exps),
                exps_detail(&got_exps)
            )
        },
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// ex3_12: cubics over GF(16) for a = 1, d = g^5, split by Frobenius direction
// ---------------------------------------------------------------------------

const EX3_12_MAP_CASES: [(u64, [u64; 3]); 5] = [
    (9, [9, 4, 14]),
    (6, [6, 1, 11]),
    (5, [5, 0, 10]),
    (1, [1, 11, 6]),
    (4, [4, 14, 9]),
];

const EX3_12_MAP_SQUARED_CASES: [(u64, [u64; 3]); 5] = [
    (8, [8, 3, 13]),
    (7, [7, 2, 12]),
    (0, [0, 10, 5]),
    (2, [2, 12, 7]),
    (13, [13, 8, 3]),
];

fn ex3_12(rec: &mut Rec) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let ctx = FieldCtx::from_table(table, 4)?;
    let a = ctx.one();
    let d = ctx.gen_pow(5);
    let map = order3_matrix(ctx, a, d)?;
    rec.eq("ex3_12 map order", map.order()?, 3);

    let ts = t_sets_order3(ctx, a, d)?;
    let got_union: BTreeSet<i64> = ts[1]
        .members()
        .iter()
        .chain(ts[2].members())
        .map(|&k| ctx.dlog(k).map_or(-1, |e| e as i64))
        .collect();
    let want_union: BTreeSet<i64> = [0, 1, 2, 4, 5, 6, 7, 8, 9, 13].into_iter().collect();
    rec.check(
        "ex3_12 irreducible parameter exponents",
        got_union == want_union,
        if got_union == want_union {
            format!("= {}", exps_detail(&got_union))
        } else {
            format!(
                "expected {}, got {}",
                exps_detail(&want_union),
                exps_detail(&got_union)
            )
        },
    );

    let mut cubics = Vec::new();
    for (dir, cases) in [
        (FrobeniusDirection::Map, &EX3_12_MAP_CASES),
        (FrobeniusDirection::MapSquared, &EX3_12_MAP_SQUARED_CASES),
    ] {
        let dir_name = match dir {
            FrobeniusDirection::Map => "map",
            FrobeniusDirection::MapSquared => "map-squared",
        };
        for &(ke, ce) in cases {
            let cls = classify_cubic(ctx, a, d, ctx.gen_pow(ke))?;
            let want = poly_from_exps(ctx, &ce);
            let name = format!("ex3_12 k=g^{ke} cubic ({dir_name} direction)");
            if cls.direction != Some(dir) {
                rec.check(name, false, format!("direction classified as {:?}", cls.direction));
                continue;
            }
            if cls.cubic != want {
                rec.check(name, false, format!("expected {want}, got {}", cls.cubic));
                continue;
            }
            rec.check(name, true, format!("= {want}"));
            cubics.push(cls.cubic);
        }
    }
    all_irreducible(rec, "ex3_12 irreducibility", &cubics)?;
    all_invariant(rec, "ex3_12 invariance", &cubics, &map)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// ex4_5: GF(64), order-3 map, orbit decomposition, cubic family, two codes
// ---------------------------------------------------------------------------

const EX4_5_ORBITS: [&[&str]; 23] = [
    &["0"],
    &["g^1", "g^6", "g^29"],
    &["g^2", "g^15", "g^37"],
    &["g^3", "g^9", "g^11"],
    &["g^4", "g^24", "g^53"],
    &["g^5", "g^49", "g^59"],
    &["g^7", "g^47", "g^20"],
    &["g^8", "g^60", "g^22"],
    &["g^10", "g^40", "g^34"],
    &["g^12", "g^36", "g^44"],
    &["g^13", "g^56", "g^31"],
    &["g^14", "g^55", "g^19"],
    &["g^16", "g^33", "g^23"],
    &["g^17", "g^28", "g^62"],
    &["g^18", "g^50", "g^48"],
    &["g^25", "g^32", "g^51"],
    &["g^26", "g^38", "g^41"],
    &["g^27", "g^43", "g^39"],
    &["g^30", "g^45", "g^46"],
    &["g^35", "g^61", "g^52"],
    &["g^54", "g^58", "g^57"],
    &["g^21", "inf", "1"],
    &["g^42"],
];

const EX4_5_CUBICS: [[u64; 3]; 21] = [
    [28, 7, 49],
    [17, 59, 38],
    [49, 28, 7],
    [43, 22, 1],
    [59, 38, 17],
    [5, 47, 26],
    [27, 6, 48],
    [7, 49, 28],
    [62, 41, 20],
    [46, 25, 4],
    [39, 18, 60],
    [30, 9, 51],
    [10, 52, 31],
    [54, 33, 12],
    [47, 26, 5],
    [58, 37, 16],
    [40, 19, 61],
    [57, 36, 15],
    [34, 13, 55],
    [45, 24, 3],
    [20, 62, 41],
];

fn ex4_5(rec: &mut Rec) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let ctx = FieldCtx::from_table(table, 6)?;
    let map = Mobius::new_c1(ctx, ctx.one(), ctx.zero(), ctx.gen_pow(21))?;
    rec.eq("ex4_5 map order", map.order()?, 3);

    let line = projective_line(ctx)?;
    let orbits = map.orbits(&line)?;
    rec.eq("ex4_5 orbit count", orbits.len(), 23);
    orbit_set_eq(
        rec,
        "ex4_5 orbit decomposition",
        &orbit_set(ctx, &orbits),
        &expected_orbit_set(&EX4_5_ORBITS),
    );

    let ts = t_sets_order3(ctx, map.a(), map.d())?;
    let mut got_cubics = Vec::new();
    for &k in ts[1].members().iter().chain(ts[2].members()) {
        let cls = classify_cubic(ctx, map.a(), map.d(), k)?;
        if cls.direction == Some(FrobeniusDirection::Map) {
            got_cubics.push(cls.cubic);
        }
    }
    let got_cubics = sort_polys(got_cubics);
    let want_cubics = sort_polys(
        EX4_5_CUBICS
            .iter()
            .map(|e| poly_from_exps(ctx, e))
            .collect(),
    );
    rec.eq("ex4_5 map-direction family size", got_cubics.len(), 21);
    poly_list_eq(rec, "ex4_5 cubics", &got_cubics, &want_cubics);
    all_irreducible(rec, "ex4_5 irreducibility", &got_cubics)?;
    all_invariant(rec, "ex4_5 invariance", &got_cubics, &map)?;

    let g1 = poly_from_exps(ctx, &[28, 7, 49]);

    let size3: Vec<Vec<ProjPoint>> = orbits.iter().filter(|o| o.len() == 3).cloned().collect();
    rec.eq("ex4_5 size-3 orbit count", size3.len(), 21);
    let support = SupportSpec::from_orbits(ctx, &size3)?;
    let spec = GoppaSpec::new(g1.clone(), support, Variant::ExtendedSubcode, Some(map))?;
    let code = build_code(spec)?;
    check_code_shape(rec, "ex4_5 extended", &code, 63, 44, (3, 21));
    code_invariants(rec, "ex4_5 extended", &code);

    let finite3: Vec<Vec<ProjPoint>> = size3
        .iter()
        .filter(|o| o.iter().all(|p| !p.is_infinity()))
        .cloned()
        .collect();
    rec.eq("ex4_5 finite size-3 orbit count", finite3.len(), 20);
    let support = SupportSpec::from_orbits(ctx, &finite3)?;
    let spec = GoppaSpec::new(g1, support, Variant::Subcode, Some(map))?;
    let code = build_code(spec)?;
    check_code_shape(rec, "ex4_5 subcode", &code, 60, 41, (3, 20));
    code_invariants(rec, "ex4_5 subcode", &code);
    Ok(())
}

// ---------------------------------------------------------------------------
// ex4_6: GF(64), order-7 map, factorization of h, two codes with distances
// ---------------------------------------------------------------------------

const EX4_6_ORBITS: [&[&str]; 11] = [
    &["0"],
    &["g^1", "g^17", "g^50", "g^6", "g^52", "g^49", "g^56"],
    &["g^2", "g^25", "g^39", "g^31", "g^44", "g^24", "g^55"],
    &["g^3", "g^62", "g^16", "g^11", "g^60", "g^59", "g^37"],
    &["g^4", "g^41", "g^26", "g^29", "g^57", "g^46", "g^33"],
    &["g^5", "g^47", "g^58", "g^42", "g^30", "g^34", "g^28"],
    &["g^7", "g^8", "g^10", "g^22", "g^48", "g^38", "g^14"],
    &["g^12", "g^32", "g^13", "g^19", "g^43", "g^15", "g^53"],
    &["g^20", "g^35", "g^40", "g^61", "g^23", "g^21", "g^51"],
    &["g^9", "g^54", "g^45", "g^18", "g^36", "1", "inf"],
    &["g^27"],
];

const EX4_6_SEPTICS: [[u64; 7]; 9] = [
    [35, 62, 26, 53, 17, 44, 8],
    [1, 28, 55, 19, 46, 10, 37],
    [28, 55, 19, 46, 10, 37, 1],
    [18, 45, 9, 36, 0, 27, 54],
    [24, 51, 15, 42, 6, 33, 60],
    [3, 30, 57, 21, 48, 12, 39],
    [12, 39, 3, 30, 57, 21, 48],
    [33, 60, 24, 51, 15, 42, 6],
    [8, 35, 62, 26, 53, 17, 44],
];

fn ex4_6(rec: &mut Rec) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let ctx = FieldCtx::from_table(table, 6)?;
    let map = Mobius::new_c1(ctx, ctx.gen_pow(9), ctx.zero(), ctx.one())?;
    rec.eq("ex4_6 map order", map.order()?, 7);

    let line = projective_line(ctx)?;
    let orbits = map.orbits(&line)?;
    rec.eq("ex4_6 orbit count", orbits.len(), 11);
    orbit_set_eq(
        rec,
        "ex4_6 orbit decomposition",
        &orbit_set(ctx, &orbits),
        &expected_orbit_set(&EX4_6_ORBITS),
    );

    let tower = TowerEmbedding::identity(ctx);
    let fac = factor_h(&tower, &map, FrobeniusDirection::Map)?;
    rec.eq("ex4_6 h degree", fac.h.degree().unwrap_or(0), 65);
    rec.eq("ex4_6 linear factor count", fac.linear_factors.len(), 2);
    rec.eq("ex4_6 invariant factor count", fac.invariant_factors.len(), 9);
    let got = sort_polys(fac.invariant_factors.clone());
    let want = sort_polys(
        EX4_6_SEPTICS
            .iter()
            .map(|e| poly_from_exps(ctx, e))
            .collect(),
    );
    poly_list_eq(rec, "ex4_6 degree-7 factors", &got, &want);
    all_irreducible(rec, "ex4_6 irreducibility", &got)?;
    all_invariant(rec, "ex4_6 invariance", &got, &map)?;

    let g1 = poly_from_exps(ctx, &[35, 62, 26, 53, 17, 44, 8]);

    let size7: Vec<Vec<ProjPoint>> = orbits.iter().filter(|o| o.len() == 7).cloned().collect();
    rec.eq("ex4_6 size-7 orbit count", size7.len(), 9);
    let support = SupportSpec::from_orbits(ctx, &size7)?;
    let spec = GoppaSpec::new(g1.clone(), support, Variant::ExtendedSubcode, Some(map))?;
    let code = build_code(spec)?;
    check_code_shape(rec, "ex4_6 extended", &code, 63, 20, (7, 9));
    code_invariants(rec, "ex4_6 extended", &code);
    let d = min_distance_exhaustive(&code.generator)?;
    rec.check(
        "ex4_6 extended minimum distance",
        d == Some(16),
        format!("expected Some(16), got {d:?}"),
    );

    let finite7: Vec<Vec<ProjPoint>> = size7
        .iter()
        .filter(|o| o.iter().all(|p| !p.is_infinity()))
        .cloned()
        .collect();
    rec.eq("ex4_6 finite size-7 orbit count", finite7.len(), 8);
    let support = SupportSpec::from_orbits(ctx, &finite7)?;
    let spec = GoppaSpec::new(g1, support, Variant::Subcode, Some(map))?;
    let code = build_code(spec)?;
    check_code_shape(rec, "ex4_6 subcode", &code, 56, 13, (7, 8));
    code_invariants(rec, "ex4_6 subcode", &code);
    let d = min_distance_exhaustive(&code.generator)?;
    rec.check(
        "ex4_6 subcode minimum distance",
        d == Some(18),
        format!("expected Some(18), got {d:?}"),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// ex4_8 / ex4_9: GF(1024), order-2 maps on roots-of-unity supports
// ---------------------------------------------------------------------------

const EX4_8_PAIRS: [(u64, u64); 16] = [
    (31, 837),
    (62, 558),
    (93, 806),
    (124, 868),
    (155, 899),
    (186, 992),
    (217, 930),
    (248, 341),
    (279, 651),
    (310, 496),
    (372, 744),
    (403, 434),
    (465, 961),
    (527, 713),
    (589, 620),
    (682, 775),
];

/// Shared shape of the two GF(1024) fixtures: an order-2 map acting on the
/// non-fixed elements of a roots-of-unity subgroup, a quadratic Goppa
/// polynomial, and the parity-check subcode with its blockwise symmetry.
struct UnitFixture {
    label: &'static str,
    subgroup: u64,
    goppa_exps: [u64; 2],
    dimension: usize,
    min_distance: u32,
    strict_pairs: Vec<(u64, u64)>,
}

fn run_unit_fixture(rec: &mut Rec, fx: &UnitFixture, map_of: impl Fn(FieldCtx) -> Result<Mobius, Error>, strict: bool) -> Result<(), Error> {
    let table = ModulusTable::builtin();
    let big = FieldCtx::from_table(table, 10)?;
    let map = map_of(big)?;
    let label = fx.label;
    rec.eq(format!("{label} map order"), map.order()?, 2);

    let units = unit_group(big, fx.subgroup)?;
    rec.eq(format!("{label} subgroup size"), units.len(), fx.subgroup as usize);
    let moving: Vec<ProjPoint> = units
        .iter()
        .map(|&u| ProjPoint::Finite(u))
        .filter(|&p| map.apply(p) != p)
        .collect();
    let n = (fx.subgroup - 1) as usize;
    rec.eq(format!("{label} support size"), moving.len(), n);
    let orbits = map.orbits(&moving)?;
    rec.eq(format!("{label} orbit count"), orbits.len(), n / 2);
    rec.check(
        format!("{label} orbit sizes"),
        orbits.iter().all(|o| o.len() == 2),
        "all transpositions",
    );

    if strict {
        let got_pairs: BTreeSet<(u64, u64)> = orbits
            .iter()
            .map(|o| {
                let mut es: Vec<u64> = o
                    .iter()
                    .map(|p| big.dlog(p.finite().expect("finite support")).expect("unit"))
                    .collect();
                es.sort_unstable();
                (es[0], es[1])
            })
            .collect();
        let want_pairs: BTreeSet<(u64, u64)> = fx.strict_pairs.iter().copied().collect();
        rec.check(
            format!("{label} orbit pairing (strict)"),
            got_pairs == want_pairs,
            if got_pairs == want_pairs {
                format!("{} exponent pairs, exact", got_pairs.len())
            } else {
                format!(
                    "first difference: expected {:?}, got {:?}",
                    want_pairs.symmetric_difference(&got_pairs).next(),
                    got_pairs.symmetric_difference(&want_pairs).next()
                )
            },
        );
    }

    let g = poly_from_exps(big, &fx.goppa_exps);
    all_irreducible(rec, &format!("{label} goppa irreducibility"), std::slice::from_ref(&g))?;
    all_invariant(rec, &format!("{label} goppa invariance"), std::slice::from_ref(&g), &map)?;

    let support = SupportSpec::from_orbits(big, &orbits)?;
    let spec = GoppaSpec::new(g, support, Variant::Subcode, Some(map))?;
    let code = build_code(spec)?;
    check_code_shape(rec, label, &code, n, fx.dimension, (2, n / 2));
    code_invariants(rec, label, &code);
    let d = min_distance_exhaustive(&code.generator)?;
    rec.check(
        format!("{label} minimum distance"),
        d == Some(fx.min_distance),
        format!("expected Some({}), got {d:?}", fx.min_distance),
    );

    if strict {
        rec.record(
            format!("{label} strict coefficient-exact outcome"),
            "confirmed",
        );
    }
    Ok(())
}

fn ex4_8(rec: &mut Rec, strict: bool) -> Result<(), Error> {
    let fx = UnitFixture {
        label: "ex4_8",
        subgroup: 33,
        goppa_exps: [459, 321],
        dimension: 11,
        min_distance: 10,
        strict_pairs: EX4_8_PAIRS.to_vec(),
    };
    run_unit_fixture(
        rec,
        &fx,
        |big| {
            let xi = big.gen_pow(33);
            Mobius::new_c1(big, xi, big.one(), xi)
        },
        strict,
    )
}

fn ex4_9(rec: &mut Rec, strict: bool) -> Result<(), Error> {
    let fx = UnitFixture {
        label: "ex4_9",
        subgroup: 31,
        goppa_exps: [800, 0],
        dimension: 9,
        min_distance: 10,
        strict_pairs: (1..=15).map(|k| (33 * k, 1023 - 33 * k)).collect(),
    };
    run_unit_fixture(
        rec,
        &fx,
        |big| Mobius::new_c1(big, big.zero(), big.one(), big.zero()),
        strict,
    )
}
