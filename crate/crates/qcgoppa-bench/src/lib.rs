//! Input builders shared by the benchmark suite: representative fields,
//! polynomials, and code specifications sized like real constructions.

use qcgoppa_core::codes::{GoppaSpec, SupportSpec, Variant};
use qcgoppa_core::{FieldCtx, Mobius, ModulusTable, Poly, ProjPoint};

/// The built-in field of the given degree.
pub fn gf(m: u32) -> FieldCtx {
    FieldCtx::from_table(ModulusTable::builtin(), m).expect("built-in modulus")
}

/// Monic polynomial with coefficients given as generator exponents from the
/// second-highest term down to the constant (degree = `exps.len()`).
pub fn monic_from_exps(ctx: FieldCtx, exps_hi_to_lo: &[u64]) -> Poly {
    let mut coeffs: Vec<_> = exps_hi_to_lo
        .iter()
        .rev()
        .map(|&e| ctx.gen_pow(e))
        .collect();
    coeffs.push(ctx.one());
    Poly::from_coeffs(ctx, coeffs)
}

/// The support made of every orbit of exactly `size` points, in canonical
/// orbit order, one block per orbit. `finite_only` drops the orbit through
/// infinity.
pub fn orbit_support(
    ctx: FieldCtx,
    map: &Mobius,
    size: usize,
    finite_only: bool,
) -> SupportSpec {
    let mut line: Vec<ProjPoint> = (0..ctx.size())
        .map(|e| ProjPoint::Finite(ctx.elem(e as u32)))
        .collect();
    line.push(ProjPoint::Infinity);
    let orbits = map.orbits(&line).expect("the projective line is closed");
    let mut points = Vec::new();
    let mut blocks = Vec::new();
    for orbit in orbits {
        if orbit.len() != size {
            continue;
        }
        if finite_only && orbit.contains(&ProjPoint::Infinity) {
            continue;
        }
        blocks.push(orbit.len());
        points.extend(orbit);
    }
    SupportSpec::with_blocks(ctx, points, blocks).expect("orbits are disjoint")
}

/// A GF(64) length-63 extended construction from an order-3 map: cubic
/// Goppa polynomial, all 21 three-point orbits (one passes through
/// infinity), symmetry attached so the build verifies the automorphism and
/// the blockwise shift.
pub fn gf64_order3_extended_spec() -> GoppaSpec {
    let ctx = gf(6);
    let map = Mobius::new_c1(ctx, ctx.one(), ctx.zero(), ctx.gen_pow(21))
        .expect("nonsingular family map");
    let g = monic_from_exps(ctx, &[28, 7, 49]);
    let support = orbit_support(ctx, &map, 3, false);
    GoppaSpec::new(g, support, Variant::ExtendedSubcode, Some(map)).expect("valid spec")
}

/// A GF(64) length-56 construction from an order-7 map: septic Goppa
/// polynomial over the eight finite 7-point orbits. Its dimension is small
/// enough for exhaustive minimum-distance enumeration.
pub fn gf64_order7_subcode_spec() -> GoppaSpec {
    let ctx = gf(6);
    let map = Mobius::new_c1(ctx, ctx.gen_pow(9), ctx.zero(), ctx.one())
        .expect("nonsingular family map");
    let g = monic_from_exps(ctx, &[35, 62, 26, 53, 17, 44, 8]);
    let support = orbit_support(ctx, &map, 7, true);
    GoppaSpec::new(g, support, Variant::Subcode, Some(map)).expect("valid spec")
}
