//! JSON input format for matroids.
//!
//! ```json
//! {"type": "graphic", "vertices": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
//! {"type": "uniform", "rank": 2, "size": 4}
//! {"type": "linear", "matrix": [[1, 0, 1], [0, 1, 1]]}
//! {"type": "bases", "size": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
//! ```
//!
//! Linear matrices hold integers of any size; columns are the elements.

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::matroid::{ElementSet, Matroid, MatroidError};

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("invalid matroid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("matrix entry {0} is not an integer")]
    NotInteger(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum MatroidJson {
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        rank: usize,
        size: usize,
    },
    Linear {
        matrix: Vec<Vec<serde_json::Number>>,
    },
    Bases {
        size: usize,
        bases: Vec<Vec<usize>>,
    },
}

pub fn parse_matroid_json(text: &str) -> Result<Matroid, SchemaError> {
    Ok(match serde_json::from_str::<MatroidJson>(text)? {
        MatroidJson::Graphic { vertices, edges } => Matroid::graphic(vertices, edges)?,
        MatroidJson::Uniform { rank, size } => Matroid::uniform(rank, size)?,
        MatroidJson::Linear { matrix } => {
            let rows = matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            x.as_str()
                                .parse::<BigInt>()
                                .map_err(|_| SchemaError::NotInteger(x.to_string()))
                        })
                        .collect()
                })
                .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
            Matroid::linear(rows)?
        }
        MatroidJson::Bases { size, bases } => {
            let mut sets = Vec::with_capacity(bases.len());
            for b in bases {
                if let Some(&e) = b.iter().find(|&&e| e >= size) {
                    return Err(MatroidError::ElementOutOfRange {
                        element: e,
                        ground_size: size,
                    }
                    .into());
                }
                sets.push(b.into_iter().collect::<ElementSet>());
            }
            Matroid::from_bases(size, sets)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn each_representation() {
        let g = parse_matroid_json(r#"{"type":"graphic","vertices":3,"edges":[[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!((g.ground_size(), g.full_rank()), (3, 2));
        let u = parse_matroid_json(r#"{"type":"uniform","rank":2,"size":4}"#).unwrap();
        assert_eq!(u.full_rank(), 2);
        let l = parse_matroid_json(r#"{"type":"linear","matrix":[[1,0,1],[0,1,123456789012345678901234567890]]}"#).unwrap();
        assert_eq!((l.ground_size(), l.full_rank()), (3, 2));
        let b = parse_matroid_json(r#"{"type":"bases","size":3,"bases":[[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!(b.full_rank(), 2);
    }

    #[test]
    fn schema_violations() {
        assert!(parse_matroid_json(r#"{"type":"uniform","rank":2}"#).is_err());
        assert!(parse_matroid_json(r#"{"type":"uniform","rank":2,"size":4,"extra":1}"#).is_err());
        assert!(parse_matroid_json(r#"{"type":"spiral"}"#).is_err());
        assert!(matches!(
            parse_matroid_json(r#"{"type":"linear","matrix":[[1.5]]}"#),
            Err(SchemaError::NotInteger(_))
        ));
        assert!(parse_matroid_json(r#"{"type":"bases","size":2,"bases":[[0,5]]}"#).is_err());
        assert!(parse_matroid_json(r#"{"type":"uniform","rank":5,"size":4}"#).is_err());
    }
}
