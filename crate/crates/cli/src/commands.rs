use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Map, Value};
use torus_af::bratteli::{self, ExportFormat};
use torus_af::contfrac::{self, ContinuedFraction};
use torus_af::exact::{self, ArithOp};
use torus_af::functor::{self, MarkedPair};
use torus_af::lattice;
use torus_af::wire::Int;
use torus_af::{ComplexQuadratic, QuadraticReal, Rational};

use crate::payload::{parse, point, RawCf, RawFoliation, RawLattice, RawMatrix, RawPseudoLattice};
use crate::CliError;

pub const DEFAULT_LEVELS: usize = 5;

type Payload = Map<String, Value>;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types always serialize")
}

fn unknown(sub: &str, op: &str) -> CliError {
    CliError::Usage(format!("unknown op {op:?} for {sub}"))
}

pub fn reduce(op: Option<&str>, payload: Payload) -> Result<Value, CliError> {
    match op.unwrap_or("reduce") {
        "reduce" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                tau: ComplexQuadratic,
            }
            let p: In = parse(payload)?;
            Ok(to_json(&lattice::reduce_fundamental(&point(p.tau)?)))
        }
        "normalize" => {
            let l = parse::<RawLattice>(payload)?.build()?;
            Ok(json!({ "tau": l.normalize().tau() }))
        }
        "basis_change" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                lattice: RawLattice,
                matrix: RawMatrix,
            }
            let p: In = parse(payload)?;
            Ok(to_json(&p.lattice.build()?.basis_change(&p.matrix.build()?)?))
        }
        "induced_tau" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                matrix: RawMatrix,
                tau: ComplexQuadratic,
            }
            let p: In = parse(payload)?;
            let image = lattice::induced_tau(&p.matrix.build()?, &point(p.tau)?)?;
            Ok(json!({ "tau": image.tau() }))
        }
        "isomorphic" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                tau1: ComplexQuadratic,
                tau2: ComplexQuadratic,
            }
            let p: In = parse(payload)?;
            let w = lattice::tori_isomorphic(&point(p.tau1)?, &point(p.tau2)?);
            Ok(json!({ "isomorphic": w.is_some(), "witness": w }))
        }
        other => Err(unknown("reduce", other)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct One {
    u: QuadraticReal,
}

pub fn cf(op: Option<&str>, payload: Payload, max_terms: Option<usize>) -> Result<Value, CliError> {
    match op.unwrap_or("expand") {
        "expand" => {
            let p: One = parse(payload)?;
            Ok(to_json(&contfrac::cf_expand_with_limit(&p.u, max_terms)?))
        }
        "value" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                cf: RawCf,
            }
            let p: In = parse(payload)?;
            Ok(json!({ "value": contfrac::cf_value(&p.cf.build()?)? }))
        }
        "convergents" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                cf: RawCf,
                n: usize,
            }
            let p: In = parse(payload)?;
            Ok(json!({ "convergents": contfrac::convergents(&p.cf.build()?, p.n)? }))
        }
        "tail" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                cf1: RawCf,
                cf2: RawCf,
            }
            let p: In = parse(payload)?;
            Ok(match contfrac::tail_equivalent(&p.cf1.build()?, &p.cf2.build()?) {
                Some((m, n)) => json!({ "aligned": true, "m": m, "n": n }),
                None => json!({ "aligned": false }),
            })
        }
        "recover" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                u: QuadraticReal,
                v: QuadraticReal,
                m: usize,
                n: usize,
            }
            let p: In = parse(payload)?;
            Ok(json!({ "matrix": contfrac::recover_matrix(&p.u, &p.v, p.m, p.n)? }))
        }
        "arith" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields, rename_all = "lowercase", tag = "field")]
            enum In {
                Real { operation: ArithOp, u: QuadraticReal, v: QuadraticReal },
                Complex { operation: ArithOp, u: ComplexQuadratic, v: ComplexQuadratic },
            }
            let mut payload = payload;
            payload.entry("field").or_insert_with(|| json!("real"));
            Ok(match parse::<In>(payload)? {
                In::Real { operation, u, v } => json!({ "result": exact::arith(operation, &u, &v)? }),
                In::Complex { operation, u, v } => json!({ "result": exact::arith(operation, &u, &v)? }),
            })
        }
        "sign" => {
            let p: One = parse(payload)?;
            Ok(json!({ "sign": p.u.signum() }))
        }
        "floor" => {
            let p: One = parse(payload)?;
            Ok(json!({ "floor": Int(p.u.floor()) }))
        }
        "canonicalize" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                x: String,
                y: String,
                d: Int,
            }
            let p: In = parse(payload)?;
            let rat = |s: &str| s.trim().parse::<Rational>().map_err(|_| CliError::Parse(format!("invalid rational {s:?}")));
            if p.d.0 < BigInt::from(0) {
                return Err(CliError::Parse("radicand must be non-negative".into()));
            }
            Ok(json!({ "result": exact::canonicalize(rat(&p.x)?, rat(&p.y)?, &p.d.0)? }))
        }
        "mobius" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                matrix: RawMatrix,
                u: Option<QuadraticReal>,
                z: Option<ComplexQuadratic>,
            }
            let p: In = parse(payload)?;
            let m = p.matrix.build()?;
            match (p.u, p.z) {
                (Some(u), None) => Ok(json!({ "result": u.mobius(&m)? })),
                (None, Some(z)) => Ok(json!({ "result": z.mobius(&m)? })),
                _ => Err(CliError::Parse("give exactly one of \"u\" (real) or \"z\" (complex)".into())),
            }
        }
        other => Err(unknown("cf", other)),
    }
}

pub fn equiv(op: Option<&str>, payload: Payload) -> Result<Value, CliError> {
    match op.unwrap_or("decide") {
        "decide" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                u: QuadraticReal,
                v: QuadraticReal,
            }
            let p: In = parse(payload)?;
            Ok(to_json(&contfrac::equivalence_decide(&p.u, &p.v)?))
        }
        other => Err(unknown("equiv", other)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WithPl {
    pseudo_lattice: RawPseudoLattice,
}

pub fn functor(op: Option<&str>, payload: Payload) -> Result<Value, CliError> {
    match op.unwrap_or("object") {
        "object" => {
            let p: WithPl = parse(payload)?;
            Ok(to_json(&functor::f_object(&p.pseudo_lattice.build()?)))
        }
        "morphism" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                matrix: RawMatrix,
            }
            let p: In = parse(payload)?;
            Ok(json!({ "matrix": functor::f_morphism(&p.matrix.build()?)? }))
        }
        "compose" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                m1: RawMatrix,
                m2: RawMatrix,
            }
            let p: In = parse(payload)?;
            let (m1, m2) = (p.m1.build()?, p.m2.build()?);
            let whole = functor::f_morphism(&(&m1 * &m2))?;
            let parts = &functor::f_morphism(&m1)? * &functor::f_morphism(&m2)?;
            Ok(json!({ "product": whole, "covariant": whole == parts }))
        }
        "to_foliation" => {
            let p: WithPl = parse(payload)?;
            Ok(to_json(&p.pseudo_lattice.build()?.to_foliation()))
        }
        "from_foliation" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                foliation: RawFoliation,
            }
            let p: In = parse(payload)?;
            Ok(to_json(&torus_af::pseudolattice::PseudoLattice::from_foliation(&p.foliation.build()?)))
        }
        "basis_change" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                pseudo_lattice: RawPseudoLattice,
                matrix: RawMatrix,
            }
            let p: In = parse(payload)?;
            Ok(to_json(&p.pseudo_lattice.build()?.basis_change(&p.matrix.build()?)?))
        }
        other => Err(unknown("functor", other)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramIn {
    theta: Option<QuadraticReal>,
    cf: Option<RawCf>,
    levels: Option<usize>,
}

impl DiagramIn {
    fn cf(self) -> Result<(ContinuedFraction, Option<usize>), CliError> {
        let cf = match (self.theta, self.cf) {
            (Some(theta), None) => {
                if !theta.is_positive() {
                    return Err(torus_af::Error::NotPositive("theta").into());
                }
                contfrac::cf_expand(&theta)?
            }
            (None, Some(cf)) => cf.build()?,
            _ => return Err(CliError::Parse("give exactly one of \"theta\" or \"cf\"".into())),
        };
        Ok((cf, self.levels))
    }
}

fn pick_levels(flag: Option<usize>, payload: Option<usize>) -> usize {
    flag.or(payload).unwrap_or(DEFAULT_LEVELS)
}

pub fn bratteli(op: Option<&str>, payload: Payload, levels: Option<usize>, dot: bool) -> Result<String, CliError> {
    let value = match op.unwrap_or("build") {
        "build" => {
            let (cf, from_payload) = parse::<DiagramIn>(payload)?.cf()?;
            let dg = bratteli::build_diagram(&cf, pick_levels(levels, from_payload))?;
            let format = if dot { ExportFormat::Dot } else { ExportFormat::Json };
            return Ok(bratteli::export_diagram(&dg, format));
        }
        "dimensions" => {
            let (cf, from_payload) = parse::<DiagramIn>(payload)?.cf()?;
            let dg = bratteli::build_diagram(&cf, pick_levels(levels, from_payload))?;
            json!({ "dimensions": bratteli::level_dimensions(&dg) })
        }
        "k0" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                theta: QuadraticReal,
                elements: Vec<(Int, Int)>,
            }
            let p: In = parse(payload)?;
            let g = bratteli::k0_group(&p.theta)?;
            let positive: Vec<bool> = p.elements.iter().map(|(a, b)| g.contains(&a.0, &b.0)).collect();
            json!({ "positive": positive })
        }
        "stable_isomorphic" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                theta1: QuadraticReal,
                theta2: QuadraticReal,
            }
            let p: In = parse(payload)?;
            to_json(&bratteli::stable_isomorphic(&p.theta1, &p.theta2)?)
        }
        other => return Err(unknown("bratteli", other)),
    };
    Ok(crate::render(&value))
}

pub fn pipeline(op: Option<&str>, payload: Payload, levels: Option<usize>) -> Result<Value, CliError> {
    if let Some(other) = op.filter(|&o| o != "pipeline") {
        return Err(unknown("pipeline", other));
    }
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct In {
        lattice: RawLattice,
        pseudo_lattice: RawPseudoLattice,
        levels: Option<usize>,
        /// Optional change of homology basis applied to both sides first.
        matrix: Option<RawMatrix>,
    }
    let p: In = parse(payload)?;
    let mut mp = MarkedPair::new(p.lattice.build()?, p.pseudo_lattice.build()?);
    if let Some(m) = p.matrix {
        mp = mp.basis_change(&m.build()?)?;
    }
    Ok(to_json(&functor::pipeline(&mp, pick_levels(levels, p.levels))?))
}
