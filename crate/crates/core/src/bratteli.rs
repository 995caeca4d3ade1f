//! Bratteli diagrams of Effros-Shen algebras and their ordered `K0` groups.
//!
//! Level 0 is a single root vertex. Every later level has an upper and a
//! lower vertex. The transition into level `n` carries `a_n` edges
//! upper→upper, one edge upper→lower and one edge lower→upper, so the vertex
//! dimensions at level `n` are `(q_n, q_{n-1})`, the convergent denominators.
//! The root plays the part of an upper vertex whose lower partner has
//! dimension zero, which gives the first transition `a_1` edges to the upper
//! vertex and one edge to the lower one. The integer part `a0` does not enter
//! the diagram and is stored alongside it.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::contfrac::{equivalence_decide, ContinuedFraction, EquivalenceVerdict};
use crate::error::{Error, Result};
use crate::exact::{QuadraticReal, UnimodularMatrix};
use crate::wire::{self, Int};

/// Edge multiplicities of one transition: `[[uu, ul], [lu, ll]]`, rows
/// indexed by the source vertex and columns by the target vertex.
pub type Multiplicities = [[BigInt; 2]; 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    quotient: BigInt,
    multiplicities: Multiplicities,
}

impl Transition {
    fn new(quotient: BigInt, from_root: bool) -> Self {
        let lower_row = if from_root { [BigInt::zero(), BigInt::zero()] } else { [BigInt::one(), BigInt::zero()] };
        let multiplicities = [[quotient.clone(), BigInt::one()], lower_row];
        Self { quotient, multiplicities }
    }

    /// Partial quotient driving this transition.
    pub fn quotient(&self) -> &BigInt {
        &self.quotient
    }

    pub fn multiplicities(&self) -> &Multiplicities {
        &self.multiplicities
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    integer_part: BigInt,
    transitions: Vec<Transition>,
}

impl BratteliDiagram {
    /// Truncation depth: number of levels below the root.
    pub fn depth(&self) -> usize {
        self.transitions.len()
    }

    pub fn integer_part(&self) -> &BigInt {
        &self.integer_part
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Partial quotients `a0, a1, ..., a_depth` the diagram was built from.
    pub fn quotients(&self) -> Vec<BigInt> {
        std::iter::once(self.integer_part.clone())
            .chain(self.transitions.iter().map(|t| t.quotient.clone()))
            .collect()
    }
}

/// Builds the first `levels` levels of the diagram of an irrational number.
pub fn build_diagram(cf: &ContinuedFraction, levels: usize) -> Result<BratteliDiagram> {
    if cf.is_finite() {
        return Err(Error::ThetaRational);
    }
    if levels == 0 {
        return Err(Error::InvalidArgument("levels must be at least 1".into()));
    }
    let transitions = (1..=levels)
        .map(|n| Transition::new(cf.term(n).expect("periodic expansions are infinite").clone(), n == 1))
        .collect();
    Ok(BratteliDiagram { integer_part: cf.integer_part().clone(), transitions })
}

/// Vertex dimensions at one level; the root has `lower = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDimension {
    #[serde(with = "wire")]
    pub upper: BigInt,
    #[serde(with = "wire")]
    pub lower: BigInt,
}

/// Dimensions at levels `0..=depth`, by pushing the root dimension through
/// the incidence matrices.
pub fn level_dimensions(dg: &BratteliDiagram) -> Vec<LevelDimension> {
    let mut out = vec![LevelDimension { upper: BigInt::one(), lower: BigInt::zero() }];
    for t in &dg.transitions {
        let prev = out.last().unwrap();
        let [[uu, ul], [lu, ll]] = &t.multiplicities;
        out.push(LevelDimension {
            upper: uu * &prev.upper + lu * &prev.lower,
            lower: ul * &prev.upper + ll * &prev.lower,
        });
    }
    out
}

/// Ordered group `Z + Z·theta` with positive cone `{(p, q) : p + q·theta > 0} ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionGroup {
    theta: QuadraticReal,
}

impl DimensionGroup {
    pub fn theta(&self) -> &QuadraticReal {
        &self.theta
    }

    /// Exact image `p + q·theta` of a group element.
    pub fn evaluate(&self, p: &BigInt, q: &BigInt) -> QuadraticReal {
        self.theta.affine(q, p)
    }

    pub fn contains(&self, p: &BigInt, q: &BigInt) -> bool {
        (p.is_zero() && q.is_zero()) || self.evaluate(p, q).is_positive()
    }
}

fn require_positive_irrational(theta: &QuadraticReal) -> Result<()> {
    if theta.is_rational() {
        return Err(Error::ThetaRational);
    }
    if !theta.is_positive() {
        return Err(Error::NotPositive("theta"));
    }
    Ok(())
}

pub fn k0_group(theta: &QuadraticReal) -> Result<DimensionGroup> {
    require_positive_irrational(theta)?;
    Ok(DimensionGroup { theta: theta.clone() })
}

const ORDER_SAMPLE_BOUND: i64 = 50;
const ORDER_SAMPLE_POINTS: usize = 128;
const ORDER_SAMPLE_SEED: u64 = 0x0e5f_5eed;

/// Stable isomorphism of the Effros-Shen algebras of `t1` and `t2`.
///
/// A witness `v = (a u + b) / (c u + d)` induces the group map
/// `(p, q) -> sign(c u + d)·(d p + b q, c p + a q)` from `K0(v)` to `K0(u)`;
/// it is checked to match the two positive cones on a sample of lattice
/// points in both directions.
pub fn stable_isomorphic(t1: &QuadraticReal, t2: &QuadraticReal) -> Result<EquivalenceVerdict> {
    require_positive_irrational(t1)?;
    require_positive_irrational(t2)?;
    let verdict = equivalence_decide(t1, t2)?;
    if let Some(w) = &verdict.witness {
        check_order_isomorphism(t1, t2, w)?;
    }
    Ok(verdict)
}

fn check_order_isomorphism(u: &QuadraticReal, v: &QuadraticReal, w: &UnimodularMatrix) -> Result<()> {
    let (gu, gv) = (k0_group(u)?, k0_group(v)?);
    let eps = BigInt::from(u.affine(w.c(), w.d()).signum());
    // forward: K0(v) -> K0(u)
    let fwd = [[w.d() * &eps, w.b() * &eps], [w.c() * &eps, w.a() * &eps]];
    // inverse of fwd; det(fwd) = det(w)
    let det = BigInt::from(w.det());
    let inv = [
        [&fwd[1][1] * &det, -&fwd[0][1] * &det],
        [-&fwd[1][0] * &det, &fwd[0][0] * &det],
    ];
    let apply = |m: &[[BigInt; 2]; 2], p: &BigInt, q: &BigInt| (&m[0][0] * p + &m[0][1] * q, &m[1][0] * p + &m[1][1] * q);

    let mut rng = ChaCha8Rng::seed_from_u64(ORDER_SAMPLE_SEED);
    for _ in 0..ORDER_SAMPLE_POINTS {
        let p = rng.gen_range(-ORDER_SAMPLE_BOUND..=ORDER_SAMPLE_BOUND);
        let q = rng.gen_range(-ORDER_SAMPLE_BOUND..=ORDER_SAMPLE_BOUND);
        let (bp, bq) = (BigInt::from(p), BigInt::from(q));
        let (x, y) = apply(&fwd, &bp, &bq);
        if gv.contains(&bp, &bq) != gu.contains(&x, &y) {
            return Err(Error::OrderCheckFailed(p, q));
        }
        let (x, y) = apply(&inv, &bp, &bq);
        if gu.contains(&bp, &bq) != gv.contains(&x, &y) {
            return Err(Error::OrderCheckFailed(p, q));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Dot,
    Json,
}

pub const FORMAT_VERSION: u32 = 1;

/// Renders a diagram as Graphviz DOT or JSON. Output is deterministic.
pub fn export_diagram(dg: &BratteliDiagram, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            let mut s = serde_json::to_string_pretty(dg).expect("diagram serialization is infallible");
            s.push('\n');
            s
        }
        ExportFormat::Dot => to_dot(dg),
    }
}

fn vertex(level: usize, upper: bool) -> String {
    format!("v{level}_{}", if upper { 'u' } else { 'l' })
}

fn to_dot(dg: &BratteliDiagram) -> String {
    let mut out = String::new();
    let depth = dg.depth();
    let dims = level_dimensions(dg);
    writeln!(out, "digraph bratteli {{").unwrap();
    writeln!(out, "  label=\"depth={depth} integer_part={}\";", dg.integer_part).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (level, dim) in dims.iter().enumerate() {
        write!(out, "  subgraph level_{level} {{ rank=same; ").unwrap();
        write!(out, "{} [label=\"{}\"]; ", vertex(level, true), dim.upper).unwrap();
        if level > 0 {
            write!(out, "{} [label=\"{}\"]; ", vertex(level, false), dim.lower).unwrap();
        }
        writeln!(out, "}}").unwrap();
    }
    for (i, t) in dg.transitions.iter().enumerate() {
        for (row, from_upper) in [(0, true), (1, false)] {
            for (col, to_upper) in [(0, true), (1, false)] {
                let count = t.multiplicities[row][col].to_usize().expect("multiplicity fits in memory");
                for _ in 0..count {
                    writeln!(out, "  {} -> {};", vertex(i, from_upper), vertex(i + 1, to_upper)).unwrap();
                }
            }
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

#[derive(Serialize, Deserialize)]
struct LevelWire {
    level: usize,
    a: Int,
    multiplicities: [[Int; 2]; 2],
    dimensions: [Int; 2],
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    format_version: u32,
    depth: usize,
    integer_part: Int,
    levels: Vec<LevelWire>,
}

impl Serialize for BratteliDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dims = level_dimensions(self);
        let int = |n: &BigInt| Int(n.clone());
        let levels = self
            .transitions
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let [[uu, ul], [lu, ll]] = &t.multiplicities;
                LevelWire {
                    level: i + 1,
                    a: int(&t.quotient),
                    multiplicities: [[int(uu), int(ul)], [int(lu), int(ll)]],
                    dimensions: [int(&dims[i + 1].upper), int(&dims[i + 1].lower)],
                }
            })
            .collect();
        DiagramWire {
            format_version: FORMAT_VERSION,
            depth: self.depth(),
            integer_part: int(&self.integer_part),
            levels,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BratteliDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DiagramWire::deserialize(d)?;
        if w.format_version != FORMAT_VERSION {
            return Err(de::Error::custom(format!("unsupported format_version {}", w.format_version)));
        }
        if w.depth != w.levels.len() || w.depth == 0 {
            return Err(de::Error::custom("depth does not match the number of levels"));
        }
        let mut transitions = Vec::with_capacity(w.depth);
        for (i, l) in w.levels.into_iter().enumerate() {
            if l.level != i + 1 || l.a.0 < BigInt::one() {
                return Err(de::Error::custom(format!("bad level entry {}", i + 1)));
            }
            let t = Transition::new(l.a.0, i == 0);
            let given = l.multiplicities.map(|row| row.map(|x| x.0));
            if given != t.multiplicities {
                return Err(de::Error::custom(format!("multiplicities at level {} do not match a", i + 1)));
            }
            transitions.push(t);
        }
        let dg = BratteliDiagram { integer_part: w.integer_part.0, transitions };
        Ok(dg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{cf_expand, VerdictKind};

    fn q(s: &str) -> QuadraticReal {
        s.parse().unwrap()
    }

    fn diagram(s: &str, levels: usize) -> BratteliDiagram {
        build_diagram(&cf_expand(&q(s)).unwrap(), levels).unwrap()
    }

    fn dims(list: &[(i64, i64)]) -> Vec<LevelDimension> {
        list.iter().map(|&(u, l)| LevelDimension { upper: u.into(), lower: l.into() }).collect()
    }

    #[test]
    fn build_examples() {
        let golden = diagram("(1+sqrt(5))/2", 3);
        assert!(golden.transitions().iter().all(|t| t.quotient().is_one()));
        let root2 = diagram("sqrt(2)", 4);
        let quotients: Vec<BigInt> = root2.transitions().iter().map(|t| t.quotient().clone()).collect();
        assert_eq!(quotients, vec![BigInt::from(2); 4]);
        assert_eq!(root2.quotients()[0], BigInt::one());
        let rational = ContinuedFraction::from_i64(&[1, 2, 3], &[]).unwrap();
        assert_eq!(build_diagram(&rational, 3), Err(Error::ThetaRational));
    }

    #[test]
    fn dimension_examples() {
        let golden = diagram("(1+sqrt(5))/2", 5);
        assert_eq!(level_dimensions(&golden), dims(&[(1, 0), (1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]));
        let root2 = diagram("sqrt(2)", 4);
        assert_eq!(level_dimensions(&root2), dims(&[(1, 0), (2, 1), (5, 2), (12, 5), (29, 12)]));
    }

    #[test]
    fn cone_examples() {
        let g = k0_group(&q("sqrt(2)")).unwrap();
        let b = |n: i64| BigInt::from(n);
        assert!(g.contains(&b(1), &b(0)));
        assert!(g.contains(&b(-1), &b(1)));
        assert!(!g.contains(&b(1), &b(-1)));
        assert!(g.contains(&b(0), &b(0)));
        assert!(!g.contains(&b(-3), &b(2)));
        assert_eq!(k0_group(&q("3/2")), Err(Error::ThetaRational));
    }

    #[test]
    fn stable_isomorphism_examples() {
        let v = stable_isomorphic(&q("sqrt(2)"), &q("1+sqrt(2)")).unwrap();
        assert_eq!(v.kind, VerdictKind::SlEquivalent);
        let v = stable_isomorphic(&q("(1+sqrt(5))/2"), &q("sqrt(5)")).unwrap();
        assert_eq!(v.kind, VerdictKind::NotEquivalent);
        let v = stable_isomorphic(&q("sqrt(7)"), &q("sqrt(7)")).unwrap();
        assert_eq!(v.witness, Some(UnimodularMatrix::identity()));
        assert_eq!(stable_isomorphic(&q("2"), &q("sqrt(2)")), Err(Error::ThetaRational));
        assert_eq!(stable_isomorphic(&q("-sqrt(2)"), &q("sqrt(2)")), Err(Error::NotPositive("theta")));
    }

    #[test]
    fn order_check_catches_bad_witness() {
        let bogus = UnimodularMatrix::from_i64(1, 1, 0, 1).unwrap();
        assert!(check_order_isomorphism(&q("sqrt(2)"), &q("sqrt(3)"), &bogus).is_err());
        let swap = UnimodularMatrix::from_i64(0, 1, 1, 0).unwrap();
        let u = q("sqrt(3)");
        assert!(check_order_isomorphism(&u, &u.mobius(&swap).unwrap(), &swap).is_ok());
    }

    #[test]
    fn dot_export() {
        let dot = export_diagram(&diagram("(1+sqrt(5))/2", 2), ExportFormat::Dot);
        assert_eq!(dot.matches("v1_u -> v2_u;").count(), 1);
        assert_eq!(dot.matches("v0_u -> v1_u;").count(), 1);
        assert!(dot.contains("depth=2"));
        let dot = export_diagram(&diagram("sqrt(2)", 2), ExportFormat::Dot);
        assert_eq!(dot.matches("v1_u -> v2_u;").count(), 2);
        assert_eq!(dot.matches("v1_l -> v2_u;").count(), 1);
        assert_eq!(dot.matches("v1_l -> v2_l;").count(), 0);
    }

    #[test]
    fn json_export_round_trip() {
        let dg = diagram("sqrt(2)", 2);
        let text = export_diagram(&dg, ExportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["format_version"], 1);
        assert_eq!(v["depth"], 2);
        assert_eq!(v["levels"][0]["a"], 2);
        assert_eq!(v["levels"][1]["dimensions"], serde_json::json!([5, 2]));
        let back: BratteliDiagram = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dg);
        assert_eq!(export_diagram(&back, ExportFormat::Json), text);
    }
}
