//! Implementations of the six subcommands.
//!
//! Every command resolves its inputs (field, map, tower) through the same
//! helpers, computes via the library, and renders either plain text or JSON
//! with a stable key order — output is byte-identical across runs and across
//! worker-thread counts.

use std::io::Write;

use serde::Serialize;

use qcgoppa_core::codes::{
    build_code, min_distance_exhaustive, parse_variant, unit_group_support, CodeReport, FieldInfo,
    GoppaSpec, SupportSpec,
};
use qcgoppa_core::invariant::{
    check_invariance, enum_invariant_order2, enum_invariant_order3, factor_h, FrobeniusDirection,
};
use qcgoppa_core::polyring::parse_poly;
use qcgoppa_core::projline::{
    embed_mobius, enum_order_l, format_point, parse_mobius, parse_point, projective_line,
    FamilyFilter, Mobius, ProjPoint,
};
use qcgoppa_core::{FieldCtx, ModulusTable, TowerEmbedding};

use crate::{fixtures, Cli, Command, Failure, Globals, EXIT_MISMATCH, EXIT_OK};

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

/// Field shorthands registered for reproducible one-word invocations.
const FIELD_SHORTHANDS: [(&str, u32); 5] =
    [("f8", 3), ("f16", 4), ("f32", 5), ("f64", 6), ("f1024", 10)];

fn parse_degree_hex(s: &str, what: &str) -> Result<(u32, u64), Failure> {
    let mut parts = s.splitn(2, ':');
    let degree = parts
        .next()
        .and_then(|t| t.trim().parse::<u32>().ok())
        .ok_or_else(|| Failure::precondition(format!("{what}: expected `<degree>:<hex>`, got `{s}`")))?;
    let bits = parts
        .next()
        .and_then(|t| u64::from_str_radix(t.trim(), 16).ok())
        .ok_or_else(|| {
            Failure::precondition(format!("{what}: expected hex modulus bits after `:` in `{s}`"))
        })?;
    Ok((degree, bits))
}

/// The built-in modulus table with any `--modulus` overrides applied.
pub fn resolve_table(globals: &Globals) -> Result<ModulusTable, Failure> {
    let mut table = ModulusTable::builtin().clone();
    for entry in &globals.modulus {
        let (degree, bits) = parse_degree_hex(entry, "--modulus")?;
        table = table.with_override(degree, bits);
    }
    Ok(table)
}

/// The base field named by `--field` (required).
pub fn resolve_field(globals: &Globals, table: &ModulusTable) -> Result<FieldCtx, Failure> {
    let spec = globals
        .field
        .as_deref()
        .ok_or_else(|| Failure::precondition("--field is required (e.g. f16 or 4:13)"))?;
    if let Some(&(_, degree)) = FIELD_SHORTHANDS.iter().find(|&&(name, _)| name == spec) {
        return Ok(FieldCtx::from_table(table, degree)?);
    }
    let (degree, bits) = parse_degree_hex(spec, "--field")?;
    Ok(FieldCtx::new(degree, bits)?)
}

fn resolve_matrix(globals: &Globals, ctx: FieldCtx) -> Result<Option<Mobius>, Failure> {
    match globals.matrix.as_deref() {
        None => Ok(None),
        Some(s) => Ok(Some(parse_mobius(ctx, s)?)),
    }
}

fn require_matrix(globals: &Globals, ctx: FieldCtx, why: &str) -> Result<Mobius, Failure> {
    resolve_matrix(globals, ctx)?.ok_or_else(|| Failure::precondition(why.to_string()))
}

fn make_tower(table: &ModulusTable, ctx: FieldCtx, s: u32) -> Result<TowerEmbedding, Failure> {
    if s == 1 {
        Ok(TowerEmbedding::identity(ctx))
    } else {
        Ok(TowerEmbedding::new(table, ctx, s)?)
    }
}

fn field_info(ctx: FieldCtx) -> FieldInfo {
    FieldInfo {
        degree: ctx.degree(),
        modulus_hex: ctx.modulus_hex(),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::precondition(format!("serialization failed: {e}")))?;
    writeln!(out, "{text}").map_err(|e| Failure::precondition(e.to_string()))
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let table = resolve_table(&cli.globals)?;
    match &cli.command {
        Command::Enumerate { deg } => cmd_enum(&cli.globals, &table, *deg, out),
        Command::Build {
            goppa,
            support,
            variant,
            min_distance,
        } => cmd_build(&cli.globals, &table, goppa, support, variant, *min_distance, out),
        Command::Verify { target } => cmd_verify(&cli.globals, target, out),
        Command::Orbits { support } => cmd_orbits(&cli.globals, &table, support.as_deref(), out),
        Command::FactorH { s, direction } => {
            cmd_factor_h(&cli.globals, &table, *s, direction, out)
        }
        Command::NlCount => cmd_nl_count(&cli.globals, &table, out),
    }
}

// ---------------------------------------------------------------------------
// enum
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EnumPolyOut {
    index: usize,
    degree: usize,
    text: String,
    invariance_scalar: String,
}

#[derive(Serialize)]
struct EnumOut {
    command: &'static str,
    field: FieldInfo,
    matrix: String,
    order: u64,
    s: u32,
    count: usize,
    polynomials: Vec<EnumPolyOut>,
}

fn cmd_enum(
    globals: &Globals,
    table: &ModulusTable,
    deg: u32,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = resolve_field(globals, table)?;
    let map = require_matrix(
        globals,
        ctx,
        "enumeration needs --matrix with a fractional map of order 2 or 3; \
         no closed-form family exists without one",
    )?;
    if map.is_affine() {
        return Err(Failure::precondition(
            "the enumeration families are fractional: the lower-left matrix entry must be nonzero",
        ));
    }
    let order = map.order()?;
    if order != 2 && order != 3 {
        return Err(Failure::precondition(format!(
            "maps of order {order} have no closed-form invariant family; supported orders are 2 and 3"
        )));
    }
    if deg == 0 || u64::from(deg) % order != 0 {
        return Err(Failure::precondition(format!(
            "--deg must be a positive multiple of the map order {order} (degree = order × s)"
        )));
    }
    let s = deg / (order as u32);
    let tower = make_tower(table, ctx, s)?;
    let polys = match order {
        2 => enum_invariant_order2(&tower, map.a(), map.b())?,
        _ => enum_invariant_order3(&tower, map.a(), map.d())?,
    };
    let mut records = Vec::with_capacity(polys.len());
    for (i, g) in polys.iter().enumerate() {
        let witness = check_invariance(g, &map)?.ok_or_else(|| {
            Failure::precondition(format!("enumerated polynomial is not invariant: {g}"))
        })?;
        records.push(EnumPolyOut {
            index: i + 1,
            degree: g.degree().unwrap_or(0),
            text: g.to_string(),
            invariance_scalar: ctx.format_elem(witness.gamma),
        });
    }
    if globals.json {
        emit_json(
            out,
            &EnumOut {
                command: "enum",
                field: field_info(ctx),
                matrix: map.format(),
                order,
                s,
                count: records.len(),
                polynomials: records,
            },
        )?;
    } else {
        let w = |e: std::io::Error| Failure::precondition(e.to_string());
        writeln!(
            out,
            "field GF(2^{}), modulus {}",
            ctx.degree(),
            ctx.modulus_hex()
        )
        .map_err(w)?;
        writeln!(out, "map {}, order {order}, s = {s}", map.format()).map_err(w)?;
        writeln!(out, "count {}", records.len()).map_err(w)?;
        for r in &records {
            writeln!(
                out,
                "g_{} = {}    [scalar {}]",
                r.index, r.text, r.invariance_scalar
            )
            .map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OrbitsOut {
    command: &'static str,
    field: FieldInfo,
    matrix: String,
    domain: String,
    orbit_count: usize,
    sizes: Vec<usize>,
    orbits: Vec<Vec<String>>,
}

fn cmd_orbits(
    globals: &Globals,
    table: &ModulusTable,
    support: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = resolve_field(globals, table)?;
    let map = require_matrix(globals, ctx, "orbit decomposition needs --matrix")?;
    let (domain, point_ctx, orbit_lists): (String, FieldCtx, Vec<Vec<ProjPoint>>) = match support {
        None => {
            let line = projective_line(ctx)?;
            (
                "projective-line".to_string(),
                ctx,
                map.orbits(&line)?,
            )
        }
        Some(sel) => {
            let n = sel
                .strip_prefix("unit-group:")
                .and_then(|t| t.parse::<u64>().ok())
                .ok_or_else(|| {
                    Failure::precondition(format!(
                        "unsupported --support `{sel}`: expected `unit-group:<n>` \
                         or omit the flag for the whole projective line"
                    ))
                })?;
            let tower = TowerEmbedding::new(table, ctx, 2)?;
            let spec = unit_group_support(&tower, &map, n)?;
            let mut lists = Vec::with_capacity(spec.blocks().len());
            let mut at = 0usize;
            for &len in spec.blocks() {
                lists.push(spec.points()[at..at + len].to_vec());
                at += len;
            }
            (format!("unit-group:{n}"), tower.sup(), lists)
        }
    };
    let orbits: Vec<Vec<String>> = orbit_lists
        .iter()
        .map(|orbit| orbit.iter().map(|&p| format_point(point_ctx, p)).collect())
        .collect();
    let sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    if globals.json {
        emit_json(
            out,
            &OrbitsOut {
                command: "orbits",
                field: field_info(point_ctx),
                matrix: map.format(),
                domain,
                orbit_count: orbits.len(),
                sizes,
                orbits,
            },
        )?;
    } else {
        let w = |e: std::io::Error| Failure::precondition(e.to_string());
        writeln!(
            out,
            "field GF(2^{}), modulus {}",
            point_ctx.degree(),
            point_ctx.modulus_hex()
        )
        .map_err(w)?;
        writeln!(out, "map {}, domain {domain}", map.format()).map_err(w)?;
        writeln!(out, "orbits {}", orbits.len()).map_err(w)?;
        for orbit in &orbits {
            writeln!(out, "({})", orbit.join(", ")).map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// factor-h
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FactorHOut {
    command: &'static str,
    field: FieldInfo,
    splitting_field: FieldInfo,
    matrix: String,
    order: u64,
    direction: String,
    h: String,
    linear_factors: Vec<String>,
    invariant_factors: Vec<String>,
}

fn cmd_factor_h(
    globals: &Globals,
    table: &ModulusTable,
    s: u32,
    direction: &str,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = resolve_field(globals, table)?;
    let map = require_matrix(globals, ctx, "factor-h needs --matrix")?;
    let dir = match direction {
        "map" => FrobeniusDirection::Map,
        "map-squared" => FrobeniusDirection::MapSquared,
        other => {
            return Err(Failure::precondition(format!(
                "unknown --direction `{other}`: expected map or map-squared"
            )))
        }
    };
    if s == 0 {
        return Err(Failure::precondition("--s must be at least 1"));
    }
    let tower = make_tower(table, ctx, s)?;
    let fac = factor_h(&tower, &map, dir)?;
    let sup = tower.sup();
    if globals.json {
        emit_json(
            out,
            &FactorHOut {
                command: "factor-h",
                field: field_info(ctx),
                splitting_field: field_info(sup),
                matrix: map.format(),
                order: fac.order,
                direction: direction.to_string(),
                h: fac.h.to_string(),
                linear_factors: fac.linear_factors.iter().map(|p| p.to_string()).collect(),
                invariant_factors: fac.invariant_factors.iter().map(|p| p.to_string()).collect(),
            },
        )?;
    } else {
        let w = |e: std::io::Error| Failure::precondition(e.to_string());
        writeln!(
            out,
            "field GF(2^{}) -> splitting field GF(2^{})",
            ctx.degree(),
            sup.degree()
        )
        .map_err(w)?;
        writeln!(
            out,
            "map {}, order {}, direction {direction}",
            map.format(),
            fac.order
        )
        .map_err(w)?;
        writeln!(out, "h = {}", fac.h).map_err(w)?;
        writeln!(out, "linear factors ({}):", fac.linear_factors.len()).map_err(w)?;
        for p in &fac.linear_factors {
            writeln!(out, "  {p}").map_err(w)?;
        }
        writeln!(out, "invariant factors ({}):", fac.invariant_factors.len()).map_err(w)?;
        for p in &fac.invariant_factors {
            writeln!(out, "  {p}").map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// nl-count
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FamilyCount {
    count: usize,
    orders_verified: bool,
}

#[derive(Serialize)]
struct Order3Count {
    count: usize,
    orders_verified: bool,
    a_zero: usize,
    d_zero: usize,
    b_zero: Option<usize>,
}

#[derive(Serialize)]
struct NlCountOut {
    command: &'static str,
    field: FieldInfo,
    q: u64,
    order2: FamilyCount,
    order3: Order3Count,
}

fn verified_orders(maps: &[Mobius], l: u64) -> Result<bool, Failure> {
    for m in maps {
        if m.order()? != l {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_nl_count(
    globals: &Globals,
    table: &ModulusTable,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = resolve_field(globals, table)?;
    let q = ctx.size();
    let order2_maps = enum_order_l(ctx, 2, FamilyFilter::All)?;
    let order3_maps = enum_order_l(ctx, 3, FamilyFilter::All)?;
    let order2 = FamilyCount {
        count: order2_maps.len(),
        orders_verified: verified_orders(&order2_maps, 2)?,
    };
    let b_zero = if (q - 1) % 3 == 0 {
        Some(enum_order_l(ctx, 3, FamilyFilter::BZero)?.len())
    } else {
        None
    };
    let order3 = Order3Count {
        count: order3_maps.len(),
        orders_verified: verified_orders(&order3_maps, 3)?,
        a_zero: enum_order_l(ctx, 3, FamilyFilter::AZero)?.len(),
        d_zero: enum_order_l(ctx, 3, FamilyFilter::DZero)?.len(),
        b_zero,
    };
    if globals.json {
        emit_json(
            out,
            &NlCountOut {
                command: "nl-count",
                field: field_info(ctx),
                q,
                order2,
                order3,
            },
        )?;
    } else {
        let w = |e: std::io::Error| Failure::precondition(e.to_string());
        writeln!(out, "q = {q}").map_err(w)?;
        writeln!(
            out,
            "order 2: {} maps, orders verified = {}",
            order2.count, order2.orders_verified
        )
        .map_err(w)?;
        let b_txt = match order3.b_zero {
            Some(n) => n.to_string(),
            None => "- (needs 3 | q-1)".to_string(),
        };
        writeln!(
            out,
            "order 3: {} maps, orders verified = {}; subfamilies a=0: {}, d=0: {}, b=0: {}",
            order3.count, order3.orders_verified, order3.a_zero, order3.d_zero, b_txt
        )
        .map_err(w)?;
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

enum OrbitFilter {
    All,
    Size { l: usize, finite_only: bool },
    Range(usize, usize),
    List(Vec<usize>),
}

enum Selector {
    Orbits(OrbitFilter),
    UnitGroup(u64),
    Explicit(Vec<String>),
}

fn parse_selector(s: &str) -> Result<Selector, Failure> {
    if let Some(rest) = s.strip_prefix("unit-group:") {
        let n = rest.parse::<u64>().map_err(|_| {
            Failure::precondition(format!("bad unit-group order `{rest}`: expected an integer"))
        })?;
        return Ok(Selector::UnitGroup(n));
    }
    if let Some(rest) = s.strip_prefix("explicit:") {
        return Ok(Selector::Explicit(
            rest.split(';').map(|t| t.trim().to_string()).collect(),
        ));
    }
    if let Some(rest) = s.strip_prefix("orbits:") {
        if rest == "all" {
            return Ok(Selector::Orbits(OrbitFilter::All));
        }
        if let Some(size_txt) = rest.strip_prefix("size=") {
            let (l_txt, finite_only) = match size_txt.strip_suffix(",finite") {
                Some(t) => (t, true),
                None => (size_txt, false),
            };
            let l = l_txt.parse::<usize>().map_err(|_| {
                Failure::precondition(format!("bad orbit size `{l_txt}`: expected an integer"))
            })?;
            return Ok(Selector::Orbits(OrbitFilter::Size { l, finite_only }));
        }
        if let Some((lo, hi)) = rest.split_once("..") {
            let lo = lo.parse::<usize>().ok();
            let hi = hi.parse::<usize>().ok();
            if let (Some(lo), Some(hi)) = (lo, hi) {
                return Ok(Selector::Orbits(OrbitFilter::Range(lo, hi)));
            }
            return Err(Failure::precondition(format!(
                "bad orbit range `{rest}`: expected `<i>..<j>` with 0-based canonical indices"
            )));
        }
        let mut indices = Vec::new();
        for part in rest.split(',') {
            indices.push(part.trim().parse::<usize>().map_err(|_| {
                Failure::precondition(format!(
                    "bad orbit selector `{rest}`: expected `all`, `size=<l>[,finite]`, \
                     `<i>..<j>`, or a comma-separated index list"
                ))
            })?);
        }
        return Ok(Selector::Orbits(OrbitFilter::List(indices)));
    }
    Err(Failure::precondition(format!(
        "unsupported --support `{s}`: expected `orbits:<filter>`, `unit-group:<n>`, \
         or `explicit:<p1;p2;...>`"
    )))
}

fn select_orbits(
    all: &[Vec<ProjPoint>],
    filter: &OrbitFilter,
) -> Result<Vec<Vec<ProjPoint>>, Failure> {
    let picked: Vec<Vec<ProjPoint>> = match filter {
        OrbitFilter::All => all.to_vec(),
        OrbitFilter::Size { l, finite_only } => all
            .iter()
            .filter(|o| o.len() == *l && (!finite_only || o.iter().all(|p| !p.is_infinity())))
            .cloned()
            .collect(),
        OrbitFilter::Range(lo, hi) => {
            if *lo >= *hi || *hi > all.len() {
                return Err(Failure::precondition(format!(
                    "orbit range {lo}..{hi} is out of bounds: {} canonical orbits",
                    all.len()
                )));
            }
            all[*lo..*hi].to_vec()
        }
        OrbitFilter::List(indices) => {
            let mut picked = Vec::with_capacity(indices.len());
            for &i in indices {
                let orbit = all.get(i).ok_or_else(|| {
                    Failure::precondition(format!(
                        "orbit index {i} is out of bounds: {} canonical orbits",
                        all.len()
                    ))
                })?;
                picked.push(orbit.clone());
            }
            picked
        }
    };
    if picked.is_empty() {
        return Err(Failure::precondition(
            "the orbit filter selected no orbits".to_string(),
        ));
    }
    Ok(picked)
}

fn render_report(report: &CodeReport, out: &mut dyn Write) -> Result<(), Failure> {
    let w = |e: std::io::Error| Failure::precondition(e.to_string());
    writeln!(out, "variant        {}", report.variant).map_err(w)?;
    writeln!(
        out,
        "field          GF(2^{}), modulus {}",
        report.field.degree, report.field.modulus_hex
    )
    .map_err(w)?;
    writeln!(out, "goppa          {}", report.goppa_poly).map_err(w)?;
    writeln!(out, "length         {}", report.length).map_err(w)?;
    writeln!(out, "dimension      {}", report.dimension).map_err(w)?;
    match &report.qc {
        Some(qc) => writeln!(
            out,
            "qc             {}-quasi-cyclic: {} blocks of size {}",
            qc.tau, qc.tau, qc.l
        )
        .map_err(w)?,
        None => writeln!(out, "qc             none").map_err(w)?,
    }
    let auto = match report.automorphism_verified {
        Some(true) => "verified",
        Some(false) => "FAILED",
        None => "not claimed",
    };
    writeln!(out, "automorphism   {auto}").map_err(w)?;
    match report.min_distance {
        Some(d) => writeln!(out, "min distance   {d}").map_err(w)?,
        None => writeln!(out, "min distance   not computed").map_err(w)?,
    }
    let mut at = 0usize;
    let mut blocks_txt = Vec::with_capacity(report.blocks.len());
    for &len in &report.blocks {
        blocks_txt.push(format!("({})", report.support[at..at + len].join(", ")));
        at += len;
    }
    writeln!(out, "support        {}", blocks_txt.join(" ")).map_err(w)?;
    Ok(())
}

fn cmd_build(
    globals: &Globals,
    table: &ModulusTable,
    goppa: &str,
    support_sel: &str,
    variant_txt: &str,
    want_min_distance: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = resolve_field(globals, table)?;
    let selector = parse_selector(support_sel)?;
    let variant = parse_variant(variant_txt)?;
    let (code_ctx, support, symmetry) = match selector {
        Selector::UnitGroup(n) => {
            let map = require_matrix(globals, ctx, "unit-group supports need --matrix")?;
            let tower = TowerEmbedding::new(table, ctx, 2)?;
            let spec = unit_group_support(&tower, &map, n)?;
            let lifted = embed_mobius(&tower, &map);
            (tower.sup(), spec, Some(lifted))
        }
        Selector::Orbits(filter) => {
            let map = require_matrix(globals, ctx, "orbit supports need --matrix")?;
            let line = projective_line(ctx)?;
            let all = map.orbits(&line)?;
            let picked = select_orbits(&all, &filter)?;
            (ctx, SupportSpec::from_orbits(ctx, &picked)?, Some(map))
        }
        Selector::Explicit(point_texts) => {
            let mut points = Vec::with_capacity(point_texts.len());
            for t in &point_texts {
                points.push(parse_point(ctx, t)?);
            }
            let symmetry = resolve_matrix(globals, ctx)?;
            (ctx, SupportSpec::flat(ctx, points)?, symmetry)
        }
    };
    let g = parse_poly(code_ctx, goppa)?;
    let symmetry_supplied = symmetry.is_some();
    let spec = GoppaSpec::new(g, support, variant, symmetry)?;
    let code = build_code(spec)?;
    let min_distance = if want_min_distance {
        min_distance_exhaustive(&code.generator)?
    } else {
        None
    };
    let report = code.report(min_distance);
    if globals.json {
        emit_json(out, &report)?;
    } else {
        render_report(&report, out)?;
    }
    if symmetry_supplied && !(code.automorphism_verified == Some(true) && code.qc.is_some()) {
        let preserved = code.automorphism_verified == Some(true);
        return Err(Failure::qc_failed(format!(
            "quasi-cyclic verification failed: code preserved by the map = {preserved}, \
             blockwise cyclic shift = {}",
            code.qc.is_some()
        )));
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyOut {
    command: &'static str,
    strict: bool,
    fixtures: Vec<fixtures::FixtureOutcome>,
    assertions: usize,
    failures: usize,
    pass: bool,
}

fn cmd_verify(globals: &Globals, target: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let ids: Vec<fixtures::FixtureId> = if target == "all" {
        fixtures::FixtureId::ALL.to_vec()
    } else {
        vec![fixtures::FixtureId::parse(target).ok_or_else(|| {
            Failure::precondition(format!(
                "unknown fixture `{target}`: expected one of {} or `all`",
                fixtures::FixtureId::ALL
                    .iter()
                    .map(|id| id.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        })?]
    };
    let mut outcomes = Vec::with_capacity(ids.len());
    for id in ids {
        outcomes.push(fixtures::run_fixture(id, globals.strict)?);
    }
    let assertions: usize = outcomes.iter().map(|o| o.assertions.len()).sum();
    let failures: usize = outcomes
        .iter()
        .map(|o| o.assertions.iter().filter(|a| !a.pass).count())
        .sum();
    let pass = failures == 0;
    if globals.json {
        emit_json(
            out,
            &VerifyOut {
                command: "verify",
                strict: globals.strict,
                fixtures: outcomes,
                assertions,
                failures,
                pass,
            },
        )?;
    } else {
        let w = |e: std::io::Error| Failure::precondition(e.to_string());
        for o in &outcomes {
            writeln!(out, "{} [{}]", o.id, o.match_mode).map_err(w)?;
            for a in &o.assertions {
                let tag = if a.pass { "PASS" } else { "FAIL" };
                writeln!(out, "  {tag} {}: {}", a.name, a.detail).map_err(w)?;
            }
            let ok = o.assertions.iter().filter(|a| a.pass).count();
            let verdict = if ok == o.assertions.len() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "=> {}: {verdict} ({ok}/{} assertions)",
                o.id,
                o.assertions.len()
            )
            .map_err(w)?;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "verify: {verdict} - {} fixtures, {assertions} assertions, {failures} failures",
            outcomes.len()
        )
        .map_err(w)?;
    }
    Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
}
