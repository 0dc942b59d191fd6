//! Randomized algebraic laws every building block must obey, checked with
//! proptest over all built-in fields up to GF(2^8).

use proptest::prelude::*;

use qcgoppa_core::codes::{build_code, BuiltCode, GoppaSpec, SupportSpec, Variant};
use qcgoppa_core::invariant::{
    check_invariance, classify_cubic, invariant_cubic, invariant_quadratic, order3_matrix,
    t_set_order2, t_sets_order3, transport,
};
use qcgoppa_core::polyring::is_irreducible;
use qcgoppa_core::projline::projective_line;
use qcgoppa_core::{Fe, FieldCtx, Mobius, ModulusTable, Poly, ProjPoint, TowerEmbedding};

fn ctx_of(m: u32) -> FieldCtx {
    FieldCtx::from_table(ModulusTable::builtin(), m).expect("built-in modulus")
}

fn elems(ctx: FieldCtx, n: usize) -> impl Strategy<Value = Vec<Fe>> {
    proptest::collection::vec(0..ctx.size(), n)
        .prop_map(move |es| es.into_iter().map(|e| ctx.elem(e as u32)).collect())
}

fn field_and_elems(n: usize) -> impl Strategy<Value = (FieldCtx, Vec<Fe>)> {
    (1u32..=8).prop_flat_map(move |m| {
        let ctx = ctx_of(m);
        elems(ctx, n).prop_map(move |v| (ctx, v))
    })
}

proptest! {
    #[test]
    fn field_axioms((ctx, es) in field_and_elems(3)) {
        let (a, b, c) = (es[0], es[1], es[2]);
        prop_assert_eq!(ctx.add(a, b), ctx.add(b, a));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(
            ctx.mul(a, ctx.add(b, c)),
            ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        );
        prop_assert!(ctx.add(a, a).is_zero());
        prop_assert_eq!(ctx.mul(a, ctx.one()), a);
        if !a.is_zero() {
            let ai = ctx.inv(a).expect("nonzero");
            prop_assert_eq!(ctx.mul(a, ai), ctx.one());
            prop_assert_eq!(ctx.div(b, a).expect("nonzero"), ctx.mul(b, ai));
        }
    }

    #[test]
    fn frobenius_and_sqrt((ctx, es) in field_and_elems(2)) {
        let (a, b) = (es[0], es[1]);
        // Squaring is the Frobenius map: additive, and iterating it m times
        // over GF(2^m) is the identity.
        prop_assert_eq!(ctx.frobenius(a, 1), ctx.square(a));
        prop_assert_eq!(
            ctx.square(ctx.add(a, b)),
            ctx.add(ctx.square(a), ctx.square(b))
        );
        prop_assert_eq!(ctx.frobenius(a, ctx.degree()), a);
        // Square roots exist and are unique in characteristic 2.
        prop_assert_eq!(ctx.sqrt(ctx.square(a)), a);
        prop_assert_eq!(ctx.square(ctx.sqrt(a)), a);
    }

    #[test]
    fn pow_laws(m in 1u32..=8, i in 0u64..5000, j in 0u64..5000, e in 0u64..1 << 16) {
        let ctx = ctx_of(m);
        prop_assert_eq!(
            ctx.mul(ctx.gen_pow(i), ctx.gen_pow(j)),
            ctx.gen_pow(i + j)
        );
        let x = ctx.elem((e % ctx.size()) as u32);
        prop_assert_eq!(ctx.mul(ctx.pow(x, i), ctx.pow(x, j)), ctx.pow(x, i + j));
        if !x.is_zero() {
            // Lagrange: the unit group order annihilates every unit.
            prop_assert_eq!(ctx.pow(x, ctx.unit_group_order()), ctx.one());
        }
    }

    #[test]
    fn trace_and_artin_schreier((ctx, es) in field_and_elems(2)) {
        let (t, u) = (es[0], es[1]);
        prop_assert!(ctx.abs_trace(t) <= 1);
        // The trace is additive.
        prop_assert_eq!(
            ctx.abs_trace(ctx.add(t, u)),
            ctx.abs_trace(t) ^ ctx.abs_trace(u)
        );
        // y^2 + y = t is solvable exactly when the absolute trace vanishes,
        // and then both roots work and differ by 1.
        match ctx.solve_artin_schreier(t) {
            Some((y1, y2)) => {
                prop_assert_eq!(ctx.abs_trace(t), 0);
                prop_assert_eq!(ctx.add(ctx.square(y1), y1), t);
                prop_assert_eq!(ctx.add(ctx.square(y2), y2), t);
                prop_assert_eq!(ctx.add(y1, y2), ctx.one());
            }
            None => prop_assert_eq!(ctx.abs_trace(t), 1),
        }
    }

    #[test]
    fn tower_embedding_is_a_field_homomorphism(
        (sub_m, s) in prop_oneof![
            Just((1u32, 5u32)), Just((2, 2)), Just((2, 3)), Just((3, 2)),
            Just((3, 3)), Just((4, 2)), Just((5, 2)), Just((6, 2)),
        ],
        raw in proptest::collection::vec(0u64..1 << 16, 2),
    ) {
        let sub = ctx_of(sub_m);
        let tower = TowerEmbedding::new(ModulusTable::builtin(), sub, s)
            .expect("tower within caps");
        let a = sub.elem((raw[0] % sub.size()) as u32);
        let b = sub.elem((raw[1] % sub.size()) as u32);
        let sup = tower.sup();
        prop_assert_eq!(
            tower.embed(sub.add(a, b)),
            sup.add(tower.embed(a), tower.embed(b))
        );
        prop_assert_eq!(
            tower.embed(sub.mul(a, b)),
            sup.mul(tower.embed(a), tower.embed(b))
        );
        prop_assert!(tower.contains(tower.embed(a)));
        prop_assert_eq!(tower.pullback(tower.embed(a)), Some(a));
        // The image is exactly the fixed field of the s-step Frobenius.
        let y = sup.elem((raw[0] % sup.size()) as u32);
        prop_assert_eq!(
            tower.contains(y),
            sup.frobenius(y, sub.degree()) == y
        );
    }

    #[test]
    fn divmod_roundtrip(m in 1u32..=6, seeds in proptest::collection::vec(0u64..u64::MAX, 14)) {
        let ctx = ctx_of(m);
        let take = |range: std::ops::Range<usize>| -> Poly {
            Poly::from_coeffs(
                ctx,
                seeds[range].iter().map(|&e| ctx.elem((e % ctx.size()) as u32)).collect(),
            )
        };
        let f = take(0..8);
        let g = take(8..14);
        prop_assume!(g.degree().is_some());
        let (q, r) = f.divmod(&g).expect("nonzero divisor");
        prop_assert!(r.degree().unwrap_or(0) < g.degree().unwrap() || r.degree().is_none());
        prop_assert_eq!(&q.mul(&g).add(&r), &f);
        // gcd divides both inputs and is monic.
        if f.degree().is_some() {
            let h = f.gcd(&g);
            prop_assert!(h.is_monic());
            prop_assert!(f.rem(&h).expect("nonzero gcd").degree().is_none());
            prop_assert!(g.rem(&h).expect("nonzero gcd").degree().is_none());
        }
    }

    #[test]
    fn eval_is_a_ring_homomorphism(m in 1u32..=6, seeds in proptest::collection::vec(0u64..u64::MAX, 11)) {
        let ctx = ctx_of(m);
        let f = Poly::from_coeffs(ctx, seeds[0..5].iter().map(|&e| ctx.elem((e % ctx.size()) as u32)).collect());
        let g = Poly::from_coeffs(ctx, seeds[5..10].iter().map(|&e| ctx.elem((e % ctx.size()) as u32)).collect());
        let x = ctx.elem((seeds[10] % ctx.size()) as u32);
        prop_assert_eq!(f.add(&g).eval(x), ctx.add(f.eval(x), g.eval(x)));
        prop_assert_eq!(f.mul(&g).eval(x), ctx.mul(f.eval(x), g.eval(x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn transport_inverts(
        m in 2u32..=6,
        seeds in proptest::collection::vec(0u64..u64::MAX, 9),
    ) {
        let ctx = ctx_of(m);
        let g = Poly::from_coeffs(
            ctx,
            seeds[0..5].iter().map(|&e| ctx.elem((e % ctx.size()) as u32)).collect(),
        );
        prop_assume!(g.degree().unwrap_or(0) >= 1);
        let pick = |i: usize| ctx.elem((seeds[i] % ctx.size()) as u32);
        let Ok(map) = Mobius::new(ctx, pick(5), pick(6), pick(7), pick(8)) else {
            return Ok(()); // singular draw
        };
        let t = transport(&g, &map).expect("positive degree");
        // The substitution can drop degree exactly when A(inf) is a root of
        // g; skip those draws, the roundtrip is only defined on full-degree
        // images.
        prop_assume!(t.degree() == g.degree());
        let back = transport(&t, &map.inverse()).expect("positive degree");
        prop_assert_eq!(back.degree(), g.degree());
        // Transporting forth and back multiplies by a nonzero scalar.
        prop_assert_eq!(back.monic(), g.monic());
    }

    #[test]
    fn mobius_group_laws(m in 1u32..=4, raw in proptest::collection::vec(0u64..u64::MAX, 13)) {
        let ctx = ctx_of(m);
        let pick = |i: usize| ctx.elem((raw[i] % ctx.size()) as u32);
        let make = |at: usize| Mobius::new(ctx, pick(at), pick(at + 1), pick(at + 2), pick(at + 3));
        let (Ok(a), Ok(b), Ok(c)) = (make(0), make(4), make(8)) else {
            return Ok(()); // singular draw
        };
        let line = projective_line(ctx).expect("small field");
        let p = line[(raw[12] % line.len() as u64) as usize];
        // Composition agrees with function composition and is associative.
        prop_assert_eq!(a.compose(&b).apply(p), a.apply(b.apply(p)));
        prop_assert_eq!(
            a.compose(&b).compose(&c).apply(p),
            a.compose(&b.compose(&c)).apply(p)
        );
        // Inverses act as inverses.
        prop_assert_eq!(a.inverse().apply(a.apply(p)), p);
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn orbits_partition_the_line(m in 1u32..=4, raw in proptest::collection::vec(0u64..u64::MAX, 4)) {
        let ctx = ctx_of(m);
        let pick = |i: usize| ctx.elem((raw[i] % ctx.size()) as u32);
        let Ok(map) = Mobius::new(ctx, pick(0), pick(1), pick(2), pick(3)) else {
            return Ok(());
        };
        let line = projective_line(ctx).expect("small field");
        let orbits = map.orbits(&line).expect("line is closed under any map");
        // Every point appears exactly once across all orbits.
        let mut seen: Vec<ProjPoint> = orbits.iter().flatten().copied().collect();
        prop_assert_eq!(seen.len(), line.len());
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), line.len());
        let order = map.order().expect("finite order");
        for orbit in &orbits {
            // Consecutive listing: each entry is the image of the previous,
            // wrapping around, and the orbit size divides the map order.
            for (i, &p) in orbit.iter().enumerate() {
                prop_assert_eq!(map.apply(p), orbit[(i + 1) % orbit.len()]);
            }
            prop_assert_eq!(order % orbit.len() as u64, 0);
        }
    }

    #[test]
    fn quadratic_family_matches_its_parameter_set(
        m in 2u32..=6,
        raw in proptest::collection::vec(0u64..u64::MAX, 3),
    ) {
        let ctx = ctx_of(m);
        let a = ctx.elem((raw[0] % ctx.size()) as u32);
        let b = ctx.elem((raw[1] % ctx.size()) as u32);
        let k = ctx.elem((raw[2] % ctx.size()) as u32);
        prop_assume!(ctx.square(a) != b); // nonsingular [[a,b],[1,a]]
        let map = Mobius::new_c1(ctx, a, b, a).expect("nonsingular");
        prop_assert_eq!(map.order().expect("involution"), 2);
        let t = t_set_order2(ctx, a, b).expect("fractional parameters");
        let g = invariant_quadratic(ctx, a, b, k);
        prop_assert_eq!(g.degree(), Some(2));
        // Irreducible exactly when the parameter lies in the T set.
        prop_assert_eq!(is_irreducible(&g).expect("nonzero"), t.contains(k));
        if t.contains(k) {
            // Irreducible members really are invariant under the map.
            prop_assert!(check_invariance(&g, &map).expect("no root at a").is_some());
        }
    }

    #[test]
    fn cubic_family_matches_its_parameter_sets(
        // The cube-coset parameter sets need 3 | q - 1, i.e. an even degree.
        m in prop_oneof![Just(2u32), Just(4u32), Just(6u32)],
        raw in proptest::collection::vec(0u64..u64::MAX, 3),
    ) {
        let ctx = ctx_of(m);
        let a = ctx.elem((raw[0] % ctx.size()) as u32);
        let d = ctx.elem((raw[1] % ctx.size()) as u32);
        let k = ctx.elem((raw[2] % ctx.size()) as u32);
        let Ok(map) = order3_matrix(ctx, a, d) else {
            return Ok(()); // degenerate parameter pair
        };
        prop_assert_eq!(map.order().expect("order three"), 3);
        let ts = t_sets_order3(ctx, a, d).expect("valid parameters");
        let g = invariant_cubic(ctx, a, d, k);
        let cls = classify_cubic(ctx, a, d, k).expect("valid parameters");
        prop_assert_eq!(&cls.cubic, &g);
        let in_t12 = ts[1].contains(k) || ts[2].contains(k);
        prop_assert_eq!(is_irreducible(&g).expect("nonzero"), in_t12);
        prop_assert_eq!(cls.direction.is_some(), in_t12);
        if in_t12 {
            prop_assert!(check_invariance(&g, &map).expect("no root at a").is_some());
        }
        // Rational roots reported by the classification really are roots.
        for &r in &cls.roots {
            prop_assert!(g.eval(r).is_zero());
        }
    }
}

// ---------------------------------------------------------------------------
// Random small codes
// ---------------------------------------------------------------------------

fn check_code(code: &BuiltCode) -> Result<(), TestCaseError> {
    let n = code.length();
    prop_assert_eq!(code.dimension() + code.parity_bits.rank(), n);
    for i in 0..code.generator.n_rows() {
        let row = code.generator.row(i);
        prop_assert!(code.parity_bits.in_kernel(row));
        prop_assert!(code.contains(row));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_codes_are_consistent(
        m in 3u32..=4,
        g_seed in proptest::collection::vec(0u64..u64::MAX, 2),
        picks in proptest::collection::vec(0u64..u64::MAX, 1),
        size in 6usize..=12,
    ) {
        let ctx = ctx_of(m);
        // A random monic quadratic, kept only when irreducible so that no
        // support point can be a root.
        let g = Poly::from_coeffs(ctx, vec![
            ctx.elem((g_seed[0] % ctx.size()) as u32),
            ctx.elem((g_seed[1] % ctx.size()) as u32),
            ctx.one(),
        ]);
        prop_assume!(is_irreducible(&g).expect("nonzero"));

        // A random window of distinct finite points, clamped to field size.
        let start = (picks[0] % ctx.size()) as u32;
        let window = size.min(ctx.size() as usize) as u32;
        let finite: Vec<ProjPoint> = (0..window)
            .map(|i| ProjPoint::Finite(ctx.elem((start + i) % ctx.size() as u32)))
            .collect();

        for variant in Variant::ALL {
            let points = if variant.is_extended() {
                let mut p = finite.clone();
                p.push(ProjPoint::Infinity);
                p
            } else {
                finite.clone()
            };
            let support = SupportSpec::flat(ctx, points).expect("distinct points");
            let spec = GoppaSpec::new(g.clone(), support, variant, None).expect("no roots in support");
            let code = build_code(spec.clone()).expect("within caps");
            check_code(&code)?;
            // Building the same specification twice is deterministic.
            let again = build_code(spec).expect("within caps");
            prop_assert_eq!(&again.generator, &code.generator);
            // The finite subcode appends one parity row on top of the plain
            // rows, so it nests inside the plain code. The extended pair does
            // NOT nest: the infinity column's nonzero entry sits in the
            // top-degree parity row, which is a different row in each
            // variant, so neither parity row set contains the other.
            let plain_variant = match variant {
                Variant::Subcode => Some(Variant::Goppa),
                _ => None,
            };
            if let Some(pv) = plain_variant {
                let psupport = SupportSpec::flat(ctx, code.spec.support().points().to_vec())
                    .expect("distinct points");
                let pspec = GoppaSpec::new(g.clone(), psupport, pv, None).expect("no roots");
                let pcode = build_code(pspec).expect("within caps");
                prop_assert!(code.dimension() <= pcode.dimension());
                for i in 0..code.generator.n_rows() {
                    prop_assert!(pcode.contains(code.generator.row(i)));
                }
            }
        }
    }
}
