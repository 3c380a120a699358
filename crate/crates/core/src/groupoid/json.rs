//! JSON interchange for actions and action morphisms.
//!
//! ```json
//! {
//!   "objects": [0, 1, 2, 3],
//!   "group": {"order": 2, "table": [[0, 1], [1, 0]]},
//!   "action": [[0, 1, 2, 3], [2, 3, 0, 1]],
//!   "adjacency": [[0, 1], [1, 2]]
//! }
//! ```
//!
//! Object ids are arbitrary JSON scalars; `action[g][i]` is the id of
//! `g·objects[i]`. Morphisms are `{"lambda": [h per g], "phi": [id per
//! object]}`, with `phi` naming codomain ids.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{ActionMorphism, FiniteAction, FiniteGroup, GroupoidError};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub objects: Vec<Value>,
    pub group: GroupSpec,
    pub action: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Vec<[Value; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub lambda: Vec<usize>,
    pub phi: Vec<Value>,
}

/// A morphism together with its domain and codomain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub domain: ActionSpec,
    pub codomain: ActionSpec,
    pub morphism: MorphismSpec,
}

fn json_err(m: impl Into<String>) -> GroupoidError {
    GroupoidError::Json(m.into())
}

fn lookup(ids: &[Value], id: &Value) -> Result<usize, GroupoidError> {
    ids.iter()
        .position(|v| v == id)
        .ok_or_else(|| json_err(format!("unknown object id {id}")))
}

impl ActionSpec {
    pub fn to_action(&self) -> Result<FiniteAction, GroupoidError> {
        for (i, id) in self.objects.iter().enumerate() {
            if !(id.is_number() || id.is_string()) {
                return Err(json_err(format!(
                    "object id {id} must be a number or a string"
                )));
            }
            if self.objects[..i].contains(id) {
                return Err(json_err(format!("duplicate object id {id}")));
            }
        }
        if self.group.table.len() != self.group.order {
            return Err(json_err(format!(
                "group order {} does not match a table with {} rows",
                self.group.order,
                self.group.table.len()
            )));
        }
        let group = FiniteGroup::new(self.group.table.clone())?;
        let act = self
            .action
            .iter()
            .map(|row| {
                row.iter()
                    .map(|id| lookup(&self.objects, id))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let adjacency = self
            .adjacency
            .as_ref()
            .map(|edges| {
                edges
                    .iter()
                    .map(|[a, b]| Ok((lookup(&self.objects, a)?, lookup(&self.objects, b)?)))
                    .collect::<Result<Vec<_>, GroupoidError>>()
            })
            .transpose()?;
        FiniteAction::new(group, self.objects.len(), act, adjacency)
    }

    /// Objects are numbered `0..n`.
    pub fn from_action(act: &FiniteAction) -> Self {
        let id = |x: usize| Value::from(x);
        ActionSpec {
            objects: (0..act.n_objects()).map(id).collect(),
            group: GroupSpec {
                order: act.group().order(),
                table: act.group().table().to_vec(),
            },
            action: act
                .table()
                .iter()
                .map(|r| r.iter().map(|&x| id(x)).collect())
                .collect(),
            adjacency: act
                .adjacency()
                .map(|e| e.iter().map(|&(a, b)| [id(a), id(b)]).collect()),
        }
    }
}

impl MorphismFile {
    pub fn from_json(text: &str) -> Result<Self, GroupoidError> {
        serde_json::from_str(text).map_err(|e| json_err(e.to_string()))
    }

    /// Domain, codomain and a validated morphism.
    pub fn resolve(&self) -> Result<(FiniteAction, FiniteAction, ActionMorphism), GroupoidError> {
        let dom = self.domain.to_action()?;
        let cod = self.codomain.to_action()?;
        let phi = self
            .morphism
            .phi
            .iter()
            .map(|id| lookup(&self.codomain.objects, id))
            .collect::<Result<Vec<_>, _>>()?;
        let mor = ActionMorphism {
            lambda: self.morphism.lambda.clone(),
            phi,
        };
        mor.validate(&dom, &cod)?;
        Ok((dom, cod, mor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4_TO_Z2: &str = r#"{
        "domain": {
            "objects": ["a", "b", "c", "d"],
            "group": {"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
            "action": [["a","b","c","d"],["b","c","d","a"],["c","d","a","b"],["d","a","b","c"]]
        },
        "codomain": {
            "objects": [0, 1],
            "group": {"order": 2, "table": [[0,1],[1,0]]},
            "action": [[0,1],[1,0]]
        },
        "morphism": {"lambda": [0,1,0,1], "phi": [0,1,0,1]}
    }"#;

    #[test]
    fn parses_and_resolves() {
        let file = MorphismFile::from_json(Z4_TO_Z2).unwrap();
        let (dom, cod, mor) = file.resolve().unwrap();
        assert_eq!(dom, FiniteAction::cyclic_shift(4, 4, 1).unwrap());
        assert_eq!(cod.n_objects(), 2);
        assert_eq!(mor.phi, vec![0, 1, 0, 1]);
    }

    #[test]
    fn round_trip_through_spec() {
        let act = FiniteAction::cyclic_shift(4, 4, 2)
            .unwrap()
            .with_adjacency(vec![(0, 1)])
            .unwrap();
        let spec = ActionSpec::from_action(&act);
        let text = serde_json::to_string(&spec).unwrap();
        let back: ActionSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_action().unwrap(), act);
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(
            MorphismFile::from_json("{"),
            Err(GroupoidError::Json(_))
        ));
        let mut file = MorphismFile::from_json(Z4_TO_Z2).unwrap();
        file.morphism.phi[0] = Value::from(7);
        assert!(matches!(file.resolve(), Err(GroupoidError::Json(_))));
        file.morphism.phi[0] = Value::from(1);
        assert!(matches!(
            file.resolve(),
            Err(GroupoidError::MalformedMorphism(_))
        ));
        file.domain.group.order = 3;
        assert!(matches!(file.resolve(), Err(GroupoidError::Json(_))));
    }
}
