//! Binary Goppa codes, their parity-check subcodes, and the extended
//! versions of both, plus the GF(2) machinery needed to measure them:
//! bit-matrix reduction, quasi-cyclic block verification, and exhaustive
//! minimum-distance search.
//!
//! The pipeline:
//!
//! 1. [`SupportSpec`] fixes an ordered list of distinct projective-line
//!    points grouped into blocks — usually the orbits of a Möbius map, in
//!    which case each block lists one orbit starting from its smallest
//!    member and following images.
//! 2. [`GoppaSpec`] pairs a Goppa polynomial with a support, picks a
//!    [`Variant`], and optionally claims a symmetry map.
//! 3. [`build_code`] assembles the symbol-level parity-check matrix over
//!    GF(2^m), expands it to GF(2), solves for the canonical generator
//!    matrix, and — when a symmetry is claimed — verifies both that the
//!    induced support permutation preserves the code and that it acts as
//!    the blockwise cyclic shift (the quasi-cyclic property).
//!
//! Column conventions: a finite support point α with v = 1/g(α) contributes
//! the column (v, vα, vα², …)ᵀ; the infinity point contributes a column that
//! is zero except for 1/lc(g) in the **last** row, wherever in the support
//! order it sits. The plain variants use deg g rows of powers; the subcode
//! variants append one more power row, cutting the code down by (at most)
//! one extra symbol-level parity condition.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2e::{Fe, FieldCtx, TowerEmbedding, ENUM_CAP};
use crate::invariant::transport;
use crate::polyring::Poly;
use crate::projline::{embed_mobius, format_point, Mobius, ProjPoint};

// ---------------------------------------------------------------------------
// Variants
// ---------------------------------------------------------------------------

/// Which of the four related codes to build from a polynomial and a support.
///
/// `Goppa` is the classical code with deg g parity rows; `Subcode` appends
/// one extra power row. The `Extended*` forms host the infinity point in
/// their support; the plain forms refuse it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Goppa,
    Subcode,
    ExtendedGoppa,
    ExtendedSubcode,
}

impl Variant {
    /// All four variants, in a fixed order.
    pub const ALL: [Variant; 4] = [
        Variant::Goppa,
        Variant::Subcode,
        Variant::ExtendedGoppa,
        Variant::ExtendedSubcode,
    ];

    /// True for the variants whose support includes the infinity point.
    pub fn is_extended(self) -> bool {
        matches!(self, Variant::ExtendedGoppa | Variant::ExtendedSubcode)
    }

    /// True for the variants with the extra power row.
    pub fn is_subcode(self) -> bool {
        matches!(self, Variant::Subcode | Variant::ExtendedSubcode)
    }

    /// Number of symbol-level parity rows for a degree-r polynomial.
    pub fn parity_rows(self, r: usize) -> usize {
        if self.is_subcode() {
            r + 1
        } else {
            r
        }
    }

    /// Stable kebab-case name, used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Variant::Goppa => "goppa",
            Variant::Subcode => "subcode",
            Variant::ExtendedGoppa => "extended-goppa",
            Variant::ExtendedSubcode => "extended-subcode",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses the kebab-case variant names accepted on the command line.
pub fn parse_variant(s: &str) -> Result<Variant> {
    Variant::ALL
        .into_iter()
        .find(|v| v.name() == s.trim())
        .ok_or_else(|| Error::Parse {
            what: "code variant",
            input: s.to_string(),
            why: "expected goppa, subcode, extended-goppa, or extended-subcode".to_string(),
        })
}

// ---------------------------------------------------------------------------
// Supports
// ---------------------------------------------------------------------------

/// An ordered support: distinct projective-line points grouped into
/// contiguous blocks.
///
/// Blocks carry the quasi-cyclic structure: when each block is one orbit of
/// a Möbius map, listed from its smallest member and following images, the
/// induced permutation of the map is exactly the blockwise cyclic shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSpec {
    ctx: FieldCtx,
    points: Vec<ProjPoint>,
    blocks: Vec<usize>,
}

impl SupportSpec {
    /// A support with explicit block sizes (they must sum to the length).
    pub fn with_blocks(
        ctx: FieldCtx,
        points: Vec<ProjPoint>,
        blocks: Vec<usize>,
    ) -> Result<SupportSpec> {
        assert_eq!(
            blocks.iter().sum::<usize>(),
            points.len(),
            "block sizes must sum to the support length"
        );
        assert!(blocks.iter().all(|&b| b >= 1), "blocks must be nonempty");
        let mut seen = BTreeSet::new();
        for p in &points {
            if let Some(x) = p.finite() {
                assert!(x == ctx.zero() || ctx.owns(x), "field context mismatch");
            }
            if !seen.insert(*p) {
                return Err(Error::DuplicatePoint {
                    point: format_point(ctx, *p),
                });
            }
        }
        Ok(SupportSpec {
            ctx,
            points,
            blocks,
        })
    }

    /// A support that is a single block.
    pub fn flat(ctx: FieldCtx, points: Vec<ProjPoint>) -> Result<SupportSpec> {
        let blocks = if points.is_empty() {
            Vec::new()
        } else {
            vec![points.len()]
        };
        SupportSpec::with_blocks(ctx, points, blocks)
    }

    /// A support whose blocks are the given orbits, concatenated in order.
    pub fn from_orbits(ctx: FieldCtx, orbits: &[Vec<ProjPoint>]) -> Result<SupportSpec> {
        let blocks: Vec<usize> = orbits.iter().map(Vec::len).collect();
        SupportSpec::with_blocks(ctx, orbits.concat(), blocks)
    }

    /// The owning field context.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// The points, in column order.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Block sizes, in order.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of points (the code length).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// True when there are no points.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// True when the support includes the infinity point.
    pub fn has_infinity(&self) -> bool {
        self.points.iter().any(|p| p.is_infinity())
    }

    /// The single block size shared by all blocks, or [`Error::MixedBlockSizes`].
    pub fn uniform_block_size(&self) -> Result<usize> {
        let mut sizes = self.blocks.clone();
        sizes.sort_unstable();
        sizes.dedup();
        match sizes[..] {
            [one] => Ok(one),
            _ => Err(Error::MixedBlockSizes { sizes }),
        }
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// A dense matrix over one field context (the symbol-level parity check).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeMatrix {
    ctx: FieldCtx,
    cols: usize,
    rows: Vec<Vec<Fe>>,
}

impl FeMatrix {
    /// The owning field context.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Number of rows.
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// The rows, each of length `n_cols()`.
    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Entry at (row, col).
    pub fn entry(&self, r: usize, c: usize) -> Fe {
        self.rows[r][c]
    }

    /// Expands each symbol row into m bit rows (bit t of the polynomial-basis
    /// encoding becomes binary row m·i + t), preserving columns.
    pub fn expand_binary(&self) -> BinMatrix {
        let m = self.ctx.degree() as usize;
        let mut out = BinMatrix::zero(self.rows.len() * m, self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                let bits = e.bits();
                for t in 0..m {
                    if (bits >> t) & 1 == 1 {
                        out.set(i * m + t, j, true);
                    }
                }
            }
        }
        out
    }
}

/// A dense GF(2) matrix with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

fn words_for(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

/// Hamming weight of a bit-packed word slice.
fn weight(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

impl BinMatrix {
    /// The all-zero matrix of the given shape.
    pub fn zero(n_rows: usize, cols: usize) -> BinMatrix {
        BinMatrix {
            cols,
            rows: vec![vec![0u64; words_for(cols)]; n_rows],
        }
    }

    /// Builds a matrix from rows of bits (each row must have `cols` entries).
    pub fn from_bit_rows(cols: usize, rows: &[Vec<bool>]) -> BinMatrix {
        let mut out = BinMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for (j, &bit) in row.iter().enumerate() {
                if bit {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Number of rows.
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Number of 64-bit words per row.
    pub fn words_per_row(&self) -> usize {
        words_for(self.cols)
    }

    /// Bit at (row, col).
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(c < self.cols);
        (self.rows[r][c / 64] >> (c % 64)) & 1 == 1
    }

    /// Sets the bit at (row, col).
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(c < self.cols);
        let mask = 1u64 << (c % 64);
        if v {
            self.rows[r][c / 64] |= mask;
        } else {
            self.rows[r][c / 64] &= !mask;
        }
    }

    /// One bit-packed row.
    pub fn row(&self, r: usize) -> &[u64] {
        &self.rows[r]
    }

    /// In-place reduction to reduced row-echelon form; returns the pivot
    /// columns in ascending order. Zero rows sink to the bottom.
    pub fn rref(&mut self) -> Vec<usize> {
        let n_rows = self.rows.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == n_rows {
                break;
            }
            let Some(src) = (r..n_rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.rows.swap(r, src);
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && (row[c / 64] >> (c % 64)) & 1 == 1 {
                    for (w, p) in row.iter_mut().zip(&pivot_row) {
                        *w ^= p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// The canonical kernel basis: one row per free column of the reduced
    /// row-echelon form, in ascending free-column order. Rows are linearly
    /// independent and the result depends only on the row space, so equal
    /// codes always produce byte-identical generators.
    pub fn kernel_basis(&self) -> BinMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut out = BinMatrix::zero(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if m.get(i, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// True when `H · word = 0`, i.e. the word satisfies every parity row.
    pub fn in_kernel(&self, word: &[u64]) -> bool {
        assert_eq!(word.len(), self.words_per_row(), "word width mismatch");
        self.rows.iter().all(|row| {
            let parity: u64 = row
                .iter()
                .zip(word)
                .fold(0u64, |acc, (a, b)| acc ^ (a & b));
            parity.count_ones() % 2 == 0
        })
    }
}

/// Applies a position permutation to a bit-packed word: bit i of the input
/// moves to position `perm[i]` of the output.
fn permute_word(word: &[u64], perm: &[usize], cols: usize) -> Vec<u64> {
    let mut out = vec![0u64; word.len()];
    for (i, &target) in perm.iter().enumerate().take(cols) {
        if (word[i / 64] >> (i % 64)) & 1 == 1 {
            out[target / 64] |= 1u64 << (target % 64);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Code specification and construction
// ---------------------------------------------------------------------------

/// Everything needed to build one code: the Goppa polynomial, the support,
/// the variant, and an optional symmetry map to verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoppaSpec {
    g: Poly,
    support: SupportSpec,
    variant: Variant,
    symmetry: Option<Mobius>,
}

impl GoppaSpec {
    /// Validates and assembles a specification.
    ///
    /// Checks: g has positive degree; no support point is a root of g
    /// ([`Error::RootInSupport`]); the infinity point appears exactly in the
    /// extended variants ([`Error::UnexpectedInfinity`] /
    /// [`Error::MissingInfinity`]).
    pub fn new(
        g: Poly,
        support: SupportSpec,
        variant: Variant,
        symmetry: Option<Mobius>,
    ) -> Result<GoppaSpec> {
        let ctx = support.ctx();
        assert!(g.ctx() == ctx, "field context mismatch");
        if let Some(map) = &symmetry {
            assert!(map.ctx() == ctx, "field context mismatch");
        }
        if g.degree().unwrap_or(0) < 1 {
            return Err(Error::DegreeZero);
        }
        for p in support.points() {
            if let Some(alpha) = p.finite() {
                if g.eval(alpha).is_zero() {
                    return Err(Error::RootInSupport {
                        point: format_point(ctx, *p),
                    });
                }
            }
        }
        match (support.has_infinity(), variant.is_extended()) {
            (true, false) => {
                return Err(Error::UnexpectedInfinity {
                    variant: variant.name().to_string(),
                })
            }
            (false, true) => {
                return Err(Error::MissingInfinity {
                    variant: variant.name().to_string(),
                })
            }
            _ => {}
        }
        Ok(GoppaSpec {
            g,
            support,
            variant,
            symmetry,
        })
    }

    /// The Goppa polynomial.
    pub fn g(&self) -> &Poly {
        &self.g
    }

    /// The support.
    pub fn support(&self) -> &SupportSpec {
        &self.support
    }

    /// The variant.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The claimed symmetry map, if any.
    pub fn symmetry(&self) -> Option<&Mobius> {
        self.symmetry.as_ref()
    }
}

/// The verified quasi-cyclic shape: `tau` blocks of `l` columns each, on
/// which the symmetry acts as `tau` disjoint `l`-cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QcBlocks {
    /// Block size (the cycle length; the order of the symmetry map).
    pub l: usize,
    /// Number of blocks.
    pub tau: usize,
}

/// Field identification for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub degree: u32,
    pub modulus_hex: String,
}

/// A serializable summary of one built code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub variant: String,
    pub field: FieldInfo,
    pub goppa_poly: String,
    pub support: Vec<String>,
    pub blocks: Vec<usize>,
    pub inf: bool,
    pub length: usize,
    pub dimension: usize,
    pub qc: Option<QcBlocks>,
    pub automorphism_verified: Option<bool>,
    pub min_distance: Option<u32>,
}

/// A fully constructed code: matrices plus verification results.
#[derive(Debug, Clone)]
pub struct BuiltCode {
    /// The validated input specification.
    pub spec: GoppaSpec,
    /// Symbol-level parity-check matrix over GF(2^m).
    pub parity_symbols: FeMatrix,
    /// Its binary expansion (m bit rows per symbol row).
    pub parity_bits: BinMatrix,
    /// Canonical generator matrix (kernel basis of `parity_bits`).
    pub generator: BinMatrix,
    /// The quasi-cyclic shape, when the claimed symmetry acts as the
    /// blockwise cyclic shift and preserves the code.
    pub qc: Option<QcBlocks>,
    /// Whether the claimed symmetry preserves the code (`None` when no
    /// symmetry was claimed).
    pub automorphism_verified: Option<bool>,
}

impl BuiltCode {
    /// Code length (number of support points).
    pub fn length(&self) -> usize {
        self.spec.support().len()
    }

    /// Code dimension over GF(2).
    pub fn dimension(&self) -> usize {
        self.generator.n_rows()
    }

    /// True when the bit-packed word is a codeword.
    pub fn contains(&self, word: &[u64]) -> bool {
        self.parity_bits.in_kernel(word)
    }

    /// Assembles the serializable report, attaching a minimum distance if
    /// one was computed.
    pub fn report(&self, min_distance: Option<u32>) -> CodeReport {
        let ctx = self.spec.support().ctx();
        CodeReport {
            variant: self.spec.variant().name().to_string(),
            field: FieldInfo {
                degree: ctx.degree(),
                modulus_hex: ctx.modulus_hex(),
            },
            goppa_poly: self.spec.g().to_string(),
            support: self
                .spec
                .support()
                .points()
                .iter()
                .map(|p| format_point(ctx, *p))
                .collect(),
            blocks: self.spec.support().blocks().to_vec(),
            inf: self.spec.support().has_infinity(),
            length: self.length(),
            dimension: self.dimension(),
            qc: self.qc,
            automorphism_verified: self.automorphism_verified,
            min_distance,
        }
    }
}

/// True when the permutation is exactly the blockwise cyclic shift for the
/// given uniform block size.
fn is_blockwise_shift(perm: &[usize], blocks: &[usize]) -> bool {
    let mut off = 0;
    for &tau in blocks {
        for j in 0..tau {
            if perm[off + j] != off + (j + 1) % tau {
                return false;
            }
        }
        off += tau;
    }
    true
}

/// Builds the code described by a specification.
///
/// When a symmetry map is claimed, its induced support permutation is
/// verified two ways: membership (every permuted generator row still
/// satisfies every parity row) and shape (uniform blocks on which the
/// permutation is the cyclic shift). The quasi-cyclic field is populated
/// only when both hold.
pub fn build_code(spec: GoppaSpec) -> Result<BuiltCode> {
    let ctx = spec.support().ctx();
    let n = spec.support().len();
    if n > 128 {
        return Err(Error::ScaleExceeded {
            what: "code construction",
            amount: n as u64,
            cap: 128,
        });
    }
    let r = spec.g().degree().expect("validated: positive degree");
    let rows_n = spec.variant().parity_rows(r);

    let mut rows = vec![vec![ctx.zero(); n]; rows_n];
    for (j, p) in spec.support().points().iter().enumerate() {
        match p.finite() {
            Some(alpha) => {
                // Column (v, vα, vα², …)ᵀ with v = 1/g(α).
                let mut acc = ctx.inv(spec.g().eval(alpha))?;
                for row in rows.iter_mut() {
                    row[j] = acc;
                    acc = ctx.mul(acc, alpha);
                }
            }
            None => {
                // Infinity column: zero except 1/lc(g) in the last row.
                rows[rows_n - 1][j] = ctx.inv(spec.g().lc())?;
            }
        }
    }
    let parity_symbols = FeMatrix { ctx, cols: n, rows };
    let parity_bits = parity_symbols.expand_binary();
    let generator = parity_bits.kernel_basis();
    debug_assert!((0..generator.n_rows()).all(|i| parity_bits.in_kernel(generator.row(i))));

    let (qc, automorphism_verified) = match spec.symmetry() {
        None => (None, None),
        Some(map) => {
            let perm = map.induced_permutation(spec.support().points())?;
            let preserved = (0..generator.n_rows()).all(|i| {
                let moved = permute_word(generator.row(i), &perm, n);
                parity_bits.in_kernel(&moved)
            });
            let qc = match spec.support().uniform_block_size() {
                Ok(l) if preserved && is_blockwise_shift(&perm, spec.support().blocks()) => {
                    Some(QcBlocks {
                        l,
                        tau: spec.support().blocks().len(),
                    })
                }
                _ => None,
            };
            (qc, Some(preserved))
        }
    };

    Ok(BuiltCode {
        spec,
        parity_symbols,
        parity_bits,
        generator,
        qc,
        automorphism_verified,
    })
}

// ---------------------------------------------------------------------------
// Support transforms and unit-group supports
// ---------------------------------------------------------------------------

/// Rewrites a specification through a Möbius change of coordinates without
/// changing the code: the polynomial becomes its transport under the map,
/// each support point α becomes A⁻¹(α) (in place, so columns keep their
/// positions and blocks their shape), and a claimed symmetry B becomes the
/// conjugate A⁻¹ ∘ B ∘ A.
///
/// Requires a finite support with finite images; the codeword sets of the
/// input and output specifications are identical.
pub fn support_transform(spec: &GoppaSpec, map: &Mobius) -> Result<GoppaSpec> {
    let ctx = spec.support().ctx();
    assert!(map.ctx() == ctx, "field context mismatch");
    if spec.support().has_infinity() {
        return Err(Error::UnexpectedInfinity {
            variant: "support-transform".to_string(),
        });
    }
    let inv = map.inverse();
    let mut points = Vec::with_capacity(spec.support().len());
    for p in spec.support().points() {
        let q = inv.apply(*p);
        if q.is_infinity() {
            return Err(Error::InfiniteImage {
                point: format_point(ctx, *p),
                variant: "support-transform".to_string(),
            });
        }
        points.push(q);
    }
    let g2 = transport(spec.g(), map)?.monic();
    let support = SupportSpec::with_blocks(ctx, points, spec.support().blocks().to_vec())?;
    let symmetry = spec.symmetry().map(|b| inv.compose(&b.compose(map)));
    GoppaSpec::new(g2, support, spec.variant(), symmetry)
}

/// The multiplicative subgroup of order n, listed as generator powers in
/// exponent order. Requires n to divide the unit-group order.
pub fn unit_group(ctx: FieldCtx, n: u64) -> Result<Vec<Fe>> {
    let group = ctx.unit_group_order();
    if n == 0 || group % n != 0 {
        return Err(Error::NonDivisorOrder { n, group });
    }
    if n > ENUM_CAP {
        return Err(Error::ScaleExceeded {
            what: "unit-group enumeration",
            amount: n,
            cap: ENUM_CAP,
        });
    }
    let step = group / n;
    Ok((0..n).map(|i| ctx.gen_pow(step * i)).collect())
}

/// Builds the canonical support on a unit subgroup: embed the map up the
/// tower, take the order-n subgroup of the top field, drop the map's fixed
/// points, and group what remains into the map's orbits.
///
/// The map lives over the tower's base field; the support lives over its
/// top field. Fails with [`Error::DomainNotClosed`] when the subgroup is
/// not stable under the map.
pub fn unit_group_support(
    tower: &TowerEmbedding,
    map: &Mobius,
    n: u64,
) -> Result<SupportSpec> {
    assert!(map.ctx() == tower.sub(), "field context mismatch");
    let sup = tower.sup();
    let lifted = embed_mobius(tower, map);
    let fixed = lifted.fixed_points();
    let points: Vec<ProjPoint> = unit_group(sup, n)?
        .into_iter()
        .map(ProjPoint::Finite)
        .filter(|p| !fixed.contains(p))
        .collect();
    let orbits = lifted.orbits(&points)?;
    SupportSpec::from_orbits(sup, &orbits)
}

// ---------------------------------------------------------------------------
// Minimum distance
// ---------------------------------------------------------------------------

/// Exhaustive minimum distance of the row space of a generator matrix whose
/// rows are linearly independent, by Gray-code enumeration of all nonzero
/// combinations (one row XOR per step), parallelized over index ranges.
///
/// Returns `None` for the zero-dimensional code. Refuses dimensions above
/// 20, where the 2^k enumeration would pass the desk-scale cap.
pub fn min_distance_exhaustive(generator: &BinMatrix) -> Result<Option<u32>> {
    let k = generator.n_rows();
    if k == 0 {
        return Ok(None);
    }
    if k > 20 {
        return Err(Error::ScaleExceeded {
            what: "minimum-distance enumeration",
            amount: 1u64.checked_shl(k as u32).unwrap_or(u64::MAX),
            cap: ENUM_CAP,
        });
    }
    let total: u64 = 1 << k;
    const CHUNK: u64 = 1 << 12;
    let n_chunks = total.div_ceil(CHUNK);
    let words = generator.words_per_row();
    let best = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(total);
            // State at the Gray code of lo, built directly.
            let mut state = vec![0u64; words];
            let gray = lo ^ (lo >> 1);
            for row in 0..k {
                if (gray >> row) & 1 == 1 {
                    for (s, w) in state.iter_mut().zip(generator.row(row)) {
                        *s ^= w;
                    }
                }
            }
            let mut best = if lo == 0 { u32::MAX } else { weight(&state) };
            for i in lo + 1..hi {
                let row = i.trailing_zeros() as usize;
                for (s, w) in state.iter_mut().zip(generator.row(row)) {
                    *s ^= w;
                }
                best = best.min(weight(&state));
            }
            best
        })
        .min()
        .unwrap_or(u32::MAX);
    Ok(Some(best))
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
