//! JSON interchange documents.
//!
//! A space document lists the universe, the parameters and the open sets,
//! each open being a map from parameter label to element labels (missing
//! parameters mean an empty slice). An optional `group` block carries a
//! Cayley table over the universe labels. Mapping, morphism and path
//! documents refer to spaces either inline or by a path relative to the
//! referring document.

use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::category::{make_morphism, STGrpMorphism, STGrpObject};
use crate::connectivity::StepPath;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::real_line::{format_rational, parse_rational};
use crate::soft::{ParamSet, SoftMapping, SoftSet, Universe};
use crate::soft_group::SoftTopGroup;
use crate::subset::Subset;
use crate::topology::{verify_topology, SoftTopology, TopologyReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub table: Vec<Vec<String>>,
    pub identity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    pub params: Vec<String>,
    pub topology: Vec<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupBlock>,
}

/// A space given inline or as a path to another document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    File(String),
    Inline(Box<SpaceDocument>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingDocument {
    pub source: SpaceRef,
    pub target: SpaceRef,
    /// Parameter map; omitted means the identity (parameter sets must agree).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<IndexMap<String, String>>,
    pub rho: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathDocument {
    pub space: SpaceRef,
    /// `0 = t0 < t1 < ... < tn = 1` as `p/q` strings.
    pub breakpoints: Vec<String>,
    /// Value on each open piece `(t_{i-1}, t_i)`.
    pub pieces: Vec<String>,
    /// Value at each breakpoint; omitted means left-closed pieces.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
}

/// A parsed space, with its group when the document has one.
#[derive(Debug, Clone)]
pub struct Space {
    pub topology: SoftTopology,
    pub group: Option<FiniteGroup>,
}

fn schema(field: impl std::fmt::Display, e: impl std::fmt::Display) -> Error {
    Error::Schema(format!("{field}: {e}"))
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| schema(path.display(), e))
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// The family of soft sets as listed, without checking the axioms.
    pub fn family(&self) -> Result<Vec<SoftSet>> {
        let universe = Universe::new(self.universe.iter().cloned()).map_err(|e| schema("universe", e))?;
        let params = ParamSet::new(self.params.iter().cloned()).map_err(|e| schema("params", e))?;
        self.topology
            .iter()
            .enumerate()
            .map(|(i, open)| {
                let mut slices = vec![Subset::EMPTY; params.len()];
                for (p, elems) in open {
                    let e = params.index_of(p).map_err(|err| schema(format_args!("topology[{i}]"), err))?;
                    let s = universe
                        .subset_of(elems)
                        .map_err(|err| schema(format_args!("topology[{i}].{p}"), err))?;
                    slices[e] = slices[e].union(s);
                }
                SoftSet::new(universe.clone(), params.clone(), slices)
            })
            .collect()
    }

    /// Parses the document into a verified topology (and group).
    pub fn to_space(&self) -> Result<Space> {
        let family = self.family()?;
        if family.is_empty() {
            return Err(schema("topology", "empty family (missing the empty and absolute soft sets)"));
        }
        let report = verify_topology(&family)?;
        if !report.is_valid() {
            return Err(Error::NotTopology(report.to_string()));
        }
        let topology = SoftTopology::new(&family)?;
        let group = match &self.group {
            None => None,
            Some(g) => Some(
                FiniteGroup::from_named(&self.universe, &g.table, &g.identity).map_err(|e| schema("group", e))?,
            ),
        };
        Ok(Space { topology, group })
    }

    /// Axiom report for the listed family.
    pub fn check(&self) -> Result<TopologyReport> {
        let family = self.family()?;
        if family.is_empty() {
            return Ok(TopologyReport::MissingEmpty);
        }
        verify_topology(&family)
    }

    pub fn from_topology(t: &SoftTopology) -> Self {
        let u = t.universe();
        let p = t.params();
        let topology = t
            .open_slices()
            .iter()
            .map(|o| {
                o.iter()
                    .enumerate()
                    .map(|(e, s)| (p.label(e).to_string(), u.names(*s).into_iter().map(String::from).collect()))
                    .collect()
            })
            .collect();
        SpaceDocument { universe: u.labels().to_vec(), params: p.labels().to_vec(), topology, group: None }
    }

    pub fn from_group(stg: &SoftTopGroup) -> Self {
        let mut d = SpaceDocument::from_topology(stg.topology());
        let g = stg.group();
        d.group = Some(GroupBlock {
            table: g.table().iter().map(|row| row.iter().map(|&c| g.label(c).to_string()).collect()).collect(),
            identity: g.label(g.identity()).to_string(),
        });
        d
    }
}

impl Space {
    pub fn soft_top_group(self) -> Result<SoftTopGroup> {
        let g = self.group.ok_or_else(|| schema("group", "missing group block"))?;
        SoftTopGroup::new(g, self.topology)
    }
}

pub fn load_space(path: &Path) -> Result<Space> {
    SpaceDocument::parse(&read(path)?)?.to_space()
}

impl SpaceRef {
    pub fn resolve(&self, base: Option<&Path>) -> Result<SpaceDocument> {
        match self {
            SpaceRef::Inline(d) => Ok((**d).clone()),
            SpaceRef::File(f) => {
                let p: PathBuf = match base {
                    Some(dir) => dir.join(f),
                    None => PathBuf::from(f),
                };
                SpaceDocument::parse(&read(&p)?)
            }
        }
    }
}

fn map_labels(field: &str, map: &IndexMap<String, String>, from: &[String], to: &[String]) -> Result<Vec<usize>> {
    from.iter()
        .map(|a| {
            let b = map.get(a).ok_or_else(|| schema(format_args!("{field}.{a}"), "missing"))?;
            to.iter().position(|x| x == b).ok_or_else(|| schema(format_args!("{field}.{a}"), format!("unknown label '{b}'")))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if let Some(k) = map.keys().find(|k| !from.contains(k)) {
                return Err(schema(format_args!("{field}.{k}"), "unknown label"));
            }
            Ok(v)
        })
}

impl MappingDocument {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    fn documents(&self, base: Option<&Path>) -> Result<(SpaceDocument, SpaceDocument)> {
        Ok((self.source.resolve(base)?, self.target.resolve(base)?))
    }

    fn components(&self, s: &SpaceDocument, t: &SpaceDocument) -> Result<(Vec<usize>, Vec<usize>)> {
        let phi = match &self.phi {
            Some(phi) => map_labels("phi", phi, &s.params, &t.params)?,
            None => {
                if s.params != t.params {
                    return Err(schema("phi", "omitted but the parameter sets differ"));
                }
                (0..s.params.len()).collect()
            }
        };
        let rho = map_labels("rho", &self.rho, &s.universe, &t.universe)?;
        Ok((phi, rho))
    }

    /// Source space, target space and the soft mapping between them.
    pub fn to_mapping(&self, base: Option<&Path>) -> Result<(Space, Space, SoftMapping)> {
        let (sd, td) = self.documents(base)?;
        let (phi, rho) = self.components(&sd, &td)?;
        let s = sd.to_space().map_err(|e| schema("source", e))?;
        let t = td.to_space().map_err(|e| schema("target", e))?;
        let m = SoftMapping::new(
            s.topology.universe().clone(),
            s.topology.params().clone(),
            t.topology.universe().clone(),
            t.topology.params().clone(),
            phi,
            rho,
        )?;
        Ok((s, t, m))
    }

    /// Verified morphism between the two group objects.
    pub fn to_morphism(&self, base: Option<&Path>) -> Result<STGrpMorphism> {
        let (sd, td) = self.documents(base)?;
        let (phi, rho) = self.components(&sd, &td)?;
        let s = STGrpObject::new(sd.to_space().and_then(Space::soft_top_group).map_err(|e| schema("source", e))?);
        let t = STGrpObject::new(td.to_space().and_then(Space::soft_top_group).map_err(|e| schema("target", e))?);
        make_morphism(&s, &t, phi, rho)
    }
}

impl PathDocument {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn to_path(&self, base: Option<&Path>) -> Result<(Space, StepPath)> {
        let space = self.space.resolve(base)?.to_space().map_err(|e| schema("space", e))?;
        let u = space.topology.universe().clone();
        let breakpoints = self
            .breakpoints
            .iter()
            .enumerate()
            .map(|(i, s)| parse_rational(s).map_err(|e| schema(format_args!("breakpoints[{i}]"), e)))
            .collect::<Result<Vec<_>>>()?;
        let labels = |field: &str, v: &[String]| {
            v.iter()
                .enumerate()
                .map(|(i, s)| u.index_of(s).map_err(|e| schema(format_args!("{field}[{i}]"), e)))
                .collect::<Result<Vec<_>>>()
        };
        let pieces = labels("pieces", &self.pieces)?;
        let path = match &self.points {
            Some(points) => StepPath::new(breakpoints, pieces, labels("points", points)?)?,
            None => StepPath::left_closed(breakpoints, pieces)?,
        };
        Ok((space, path))
    }

    pub fn from_path(space: SpaceRef, p: &StepPath, u: &Universe) -> Self {
        let names = |v: &[usize]| v.iter().map(|&x| u.label(x).to_string()).collect();
        PathDocument {
            space,
            breakpoints: p.breakpoints().iter().map(format_rational).collect(),
            pieces: names(p.pieces()),
            points: Some(names(p.points())),
        }
    }
}

/// Reads a document file, returning its directory for resolving references.
pub fn read_document(path: &Path) -> Result<(String, Option<PathBuf>)> {
    Ok((read(path)?, path.parent().map(Path::to_path_buf)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::soft_group::fixtures;

    const P_SPACE: &str = r#"{
        "universe": ["1", "2", "3"],
        "params": ["e1", "e2"],
        "topology": [
            {},
            {"e1": ["1", "2", "3"], "e2": ["1", "2", "3"]},
            {"e1": ["1"], "e2": ["1"]},
            {"e1": ["1", "2"], "e2": ["1", "2"]}
        ]
    }"#;

    #[test]
    fn space_round_trip() {
        let d = SpaceDocument::parse(P_SPACE).unwrap();
        let s = d.to_space().unwrap();
        let back = SpaceDocument::from_topology(&s.topology);
        let again = SpaceDocument::parse(&back.to_json()).unwrap().to_space().unwrap();
        assert_eq!(again.topology, s.topology);
        assert_eq!(SpaceDocument::from_topology(&again.topology), back);
    }

    #[test]
    fn schema_errors() {
        let d = SpaceDocument::parse(r#"{"universe":["a"],"params":["e"],"topology":[]}"#).unwrap();
        assert!(matches!(d.to_space(), Err(Error::Schema(_))));
        let e = SpaceDocument::parse(r#"{"universe":["a"],"params":["e"],"topology":[{"e":["z"]}]}"#)
            .unwrap()
            .to_space()
            .unwrap_err();
        assert!(e.to_string().contains("topology[0].e"), "{e}");
        let e = SpaceDocument::parse("{\n\"universe\": 3}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }

    #[test]
    fn group_documents() {
        let z4 = fixtures::z4_coset(1);
        let d = SpaceDocument::from_group(&z4);
        let back = SpaceDocument::parse(&d.to_json()).unwrap().to_space().unwrap().soft_top_group().unwrap();
        assert_eq!(back, z4);
    }

    #[test]
    fn path_documents() {
        let text = format!(
            r#"{{"space": {P_SPACE}, "breakpoints": ["0", "1/2", "1"], "pieces": ["1", "2"], "points": ["1", "2", "2"]}}"#
        );
        let (space, p) = PathDocument::parse(&text).unwrap().to_path(None).unwrap();
        assert!(crate::connectivity::is_soft_path(&p, &space.topology).unwrap().holds());
    }

    #[test]
    fn mapping_documents() {
        let text = format!(r#"{{"source": {P_SPACE}, "target": {P_SPACE}, "rho": {{"1": "1", "2": "2", "3": "3"}}}}"#);
        let (s, t, m) = MappingDocument::parse(&text).unwrap().to_mapping(None).unwrap();
        assert!(crate::topology::is_soft_continuous(&m, &s.topology, &t.topology).unwrap().holds());
        let bad = format!(r#"{{"source": {P_SPACE}, "target": {P_SPACE}, "rho": {{"1": "9", "2": "2", "3": "3"}}}}"#);
        assert!(MappingDocument::parse(&bad).unwrap().to_mapping(None).is_err());
    }
}
