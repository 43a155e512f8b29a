//! JSON formats for objects, morphism families and witnesses.
//!
//! Matrix entries are fraction strings such as `(2*a1+a2)/(a1*a2^2)`, the
//! same text the fraction parser reads back.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ajscat::{FracMat, KMorphism, KObject, Provenance};
use crate::alcove::{Alcove, AlcoveJson};
use crate::dualtilt::{DualityWitness, WitnessCheck};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::RootFraction;
use crate::lattice::SubmoduleBasis;
use crate::rootsys::{RootDatum, RootType};

pub const OBJECT_FORMAT: &str = "ajs-object/1";
pub const WITNESS_FORMAT: &str = "ajs-witness/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub alcove: AlcoveJson,
    pub degrees: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub alcove: AlcoveJson,
    pub beta: usize,
    pub root: String,
    pub ambient: Vec<i32>,
    pub split: usize,
    pub degrees: Vec<i32>,
    /// One list of entries per basis vector.
    pub columns: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectJson {
    pub format: String,
    pub root_type: RootType,
    pub field: String,
    pub provenance: Provenance,
    pub components: Vec<ComponentJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub alcove: AlcoveJson,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub format: String,
    pub root_type: RootType,
    pub field: String,
    pub source: String,
    pub target: String,
    pub shift: i32,
    pub forward: Vec<MatrixJson>,
    pub backward: Vec<MatrixJson>,
    pub verdict: WitnessCheck,
}

pub fn object_to_json<F: Field>(m: &KObject<F>) -> ObjectJson {
    let rd = m.root_datum();
    let components = m
        .components()
        .iter()
        .map(|(a, d)| ComponentJson { alcove: rd.alcove_json(*a), degrees: d.clone() })
        .collect();
    let edges = m
        .edges()
        .iter()
        .map(|(&(a, b), e)| EdgeJson {
            alcove: rd.alcove_json(a),
            beta: b,
            root: rd.root_label(b),
            ambient: e.ambient().to_vec(),
            split: e.split(),
            degrees: e.degrees().to_vec(),
            columns: (0..e.rank()).map(|j| e.column(j).iter().map(|x| x.render()).collect()).collect(),
        })
        .collect();
    ObjectJson {
        format: OBJECT_FORMAT.into(),
        root_type: rd.ty,
        field: F::label(),
        provenance: m.provenance().clone(),
        components,
        edges,
    }
}

fn alcove_of(rd: &RootDatum, a: &AlcoveJson) -> Result<Alcove> {
    rd.alcove_from_parts(&a.finite_word, &a.translation).map_err(|e| AjsError::Schema(format!("bad alcove: {e}")))
}

pub fn object_from_json<F: Field>(j: &ObjectJson) -> Result<KObject<F>> {
    if j.format != OBJECT_FORMAT {
        return Err(AjsError::Schema(format!("unknown format {:?}", j.format)));
    }
    if j.field != F::label() {
        return Err(AjsError::Schema(format!("dump is over {}, loading over {}", j.field, F::label())));
    }
    let rd = RootDatum::get(j.root_type);
    let mut comps = BTreeMap::new();
    for c in &j.components {
        if comps.insert(alcove_of(rd, &c.alcove)?, c.degrees.clone()).is_some() {
            return Err(AjsError::Schema("repeated component".into()));
        }
    }
    let mut edges = BTreeMap::new();
    for e in &j.edges {
        let a = alcove_of(rd, &e.alcove)?;
        if e.beta >= rd.n_pos() {
            return Err(AjsError::Schema(format!("root index {} out of range", e.beta)));
        }
        if e.columns.len() != e.degrees.len() {
            return Err(AjsError::Schema(format!("{} columns but {} degrees", e.columns.len(), e.degrees.len())));
        }
        let cols = e
            .columns
            .iter()
            .map(|c| c.iter().map(|s| RootFraction::<F>::parse(rd, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|err| AjsError::Schema(format!("edge entry: {err}")))?;
        let basis = SubmoduleBasis::from_fractions(rd, e.beta, e.ambient.clone(), e.split, &cols, e.degrees.clone())
            .map_err(|err| AjsError::Schema(format!("edge at root {}: {err}", e.root)))?;
        if edges.insert((a, e.beta), basis).is_some() {
            return Err(AjsError::Schema("repeated edge".into()));
        }
    }
    KObject::from_parts(rd, comps, edges, j.provenance.clone())
}

pub fn dump_object<F: Field>(m: &KObject<F>) -> String {
    serde_json::to_string_pretty(&object_to_json(m)).expect("object JSON")
}

pub fn load_object<F: Field>(text: &str) -> Result<KObject<F>> {
    let j: ObjectJson = serde_json::from_str(text).map_err(|e| AjsError::Schema(e.to_string()))?;
    object_from_json(&j)
}

fn family_json<F: Field>(rd: &RootDatum, f: &KMorphism<F>) -> Vec<MatrixJson> {
    f.maps().iter().map(|(a, m)| MatrixJson { alcove: rd.alcove_json(*a), rows: m.render_rows() }).collect()
}

pub fn family_from_json<F: Field>(rd: &'static RootDatum, mats: &[MatrixJson]) -> Result<KMorphism<F>> {
    let mut maps = BTreeMap::new();
    for m in mats {
        let rows = m
            .rows
            .iter()
            .map(|r| r.iter().map(|s| RootFraction::<F>::parse(rd, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AjsError::Schema("ragged matrix".into()));
        }
        maps.insert(alcove_of(rd, &m.alcove)?, FracMat::from_dense(rd, &rows, ncols));
    }
    Ok(KMorphism::from_maps(rd, maps))
}

pub fn witness_to_json<F: Field>(w: &DualityWitness<F>) -> Result<WitnessJson> {
    let rd = w.source.root_datum();
    Ok(WitnessJson {
        format: WITNESS_FORMAT.into(),
        root_type: rd.ty,
        field: F::label(),
        source: w.source.provenance().render(rd),
        target: w.target.provenance().render(rd),
        shift: w.shift,
        forward: family_json(rd, &w.forward),
        backward: family_json(rd, &w.backward),
        verdict: w.verify()?,
    })
}
