//! JSON instance format.
//!
//! Two kinds are accepted, both with row index `x` and column index `y`:
//!
//! ```json
//! {"n": 3, "kind": "rc", "table": [[1,2,0],[1,2,0],[1,2,0]]}
//! {"n": 2, "kind": "solution", "table": [[[1,1],[0,0]],[[1,1],[0,0]]]}
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rcq::RcTable;
use crate::solution::SolutionTable;

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum InstanceFile {
    Rc {
        n: usize,
        table: Vec<Vec<usize>>,
    },
    Solution {
        n: usize,
        table: Vec<Vec<[usize; 2]>>,
    },
}

/// A parsed input instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Rc(RcTable),
    Solution(SolutionTable),
}

/// Parses an instance from JSON text. Shape and range errors are reported
/// with the declared `n`; JSON syntax errors carry line and column.
pub fn parse_instance(json: &str) -> Result<Instance> {
    let file: InstanceFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    match file {
        InstanceFile::Rc { n, table } => {
            if table.len() != n {
                return Err(Error::MalformedTable(format!(
                    "declared n = {n} but table has {} rows",
                    table.len()
                )));
            }
            Ok(Instance::Rc(RcTable::new(table)?))
        }
        InstanceFile::Solution { n, table } => {
            if table.len() != n {
                return Err(Error::MalformedTable(format!(
                    "declared n = {n} but table has {} rows",
                    table.len()
                )));
            }
            let rows = table
                .into_iter()
                .map(|row| row.into_iter().map(|[a, b]| (a, b)).collect())
                .collect();
            Ok(Instance::Solution(SolutionTable::new(rows)?))
        }
    }
}

/// Serializes an RC-table to the JSON instance format.
pub fn rc_to_json(t: &RcTable) -> String {
    serde_json::json!({
        "n": t.n(),
        "kind": "rc",
        "table": t.to_rows(),
    })
    .to_string()
}
