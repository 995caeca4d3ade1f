//! Raw payload shapes. Values are checked by the library constructors after
//! parsing so that invariant violations surface as domain errors, not as
//! malformed input.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{Map, Value};
use torus_af::contfrac::ContinuedFraction;
use torus_af::lattice::{Lattice, ModuliPoint};
use torus_af::pseudolattice::{MeasuredFoliation, PseudoLattice};
use torus_af::wire::Int;
use torus_af::{ComplexQuadratic, QuadraticReal, UnimodularMatrix};

use crate::CliError;

pub(crate) fn parse<T: DeserializeOwned>(payload: Map<String, Value>) -> Result<T, CliError> {
    Ok(serde_json::from_value(Value::Object(payload))?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawMatrix {
    a: Int,
    b: Int,
    c: Int,
    d: Int,
}

impl RawMatrix {
    pub fn build(self) -> Result<UnimodularMatrix, CliError> {
        Ok(UnimodularMatrix::new(self.a.0, self.b.0, self.c.0, self.d.0)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawLattice {
    omega1: ComplexQuadratic,
    omega2: ComplexQuadratic,
}

impl RawLattice {
    pub fn build(self) -> Result<Lattice, CliError> {
        Ok(Lattice::new(self.omega1, self.omega2)?)
    }
}

pub(crate) fn point(tau: ComplexQuadratic) -> Result<ModuliPoint, CliError> {
    Ok(ModuliPoint::new(tau)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawPseudoLattice {
    lambda1: QuadraticReal,
    lambda2: QuadraticReal,
}

impl RawPseudoLattice {
    pub fn build(self) -> Result<PseudoLattice, CliError> {
        Ok(PseudoLattice::new(self.lambda1, self.lambda2)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawFoliation {
    slope: QuadraticReal,
    measure: QuadraticReal,
}

impl RawFoliation {
    pub fn build(self) -> Result<MeasuredFoliation, CliError> {
        Ok(MeasuredFoliation::new(self.slope, self.measure)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawCf {
    preperiod: Vec<Int>,
    #[serde(default)]
    period: Vec<Int>,
}

impl RawCf {
    pub fn build(self) -> Result<ContinuedFraction, CliError> {
        let ints = |v: Vec<Int>| v.into_iter().map(|i| i.0).collect();
        Ok(ContinuedFraction::new(ints(self.preperiod), ints(self.period))?)
    }
}
