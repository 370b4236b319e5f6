
//! Built-in families and jump intervals (placeholder: families first, the
//! interval logic lands with the sdp module).

use crate::enumerate::ForbiddenFamily;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn g(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
    let e: Vec<Vec<usize>> = edges.iter().map(|t| t.to_vec()).collect();
    Hypergraph::new(3, n, &e).expect("builtin edge lists are valid")
}

/// {123, 124, 134}: four vertices, three edges.
pub fn k4_minus_graph() -> Hypergraph {
    g(4, &[[1, 2, 3], [1, 2, 4], [1, 3, 4]])
}

pub fn f1_graph() -> Hypergraph {
    k4_minus_graph()
}

pub fn f2_graph() -> Hypergraph {
    g(5, &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [3, 4, 5]])
}

pub fn f3_graph() -> Hypergraph {
    g(5, &[[1, 2, 3], [1, 2, 4], [2, 3, 5], [1, 4, 5], [3, 4, 5]])
}

pub fn f4_graph() -> Hypergraph {
    g(
        7,
        &[
            [1, 2, 3],
            [1, 3, 5],
            [1, 4, 5],
            [2, 4, 5],
            [1, 2, 6],
            [2, 4, 6],
            [3, 4, 6],
            [3, 5, 6],
            [2, 3, 7],
            [1, 4, 7],
            [3, 4, 7],
            [2, 5, 7],
            [1, 6, 7],
        ],
    )
}

pub fn f5_graph() -> Hypergraph {
    g(
        7,
        &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 5],
            [2, 3, 6],
            [3, 4, 6],
            [2, 5, 6],
            [4, 5, 6],
            [2, 4, 7],
            [3, 4, 7],
            [2, 5, 7],
            [3, 5, 7],
            [1, 6, 7],
        ],
    )
}

/// The named built-in families: "K4-minus", "F-star" (three members), and
/// "F-prime" (five members).
pub fn builtin_family(name: &str) -> Result<ForbiddenFamily> {
    let members = match name {
        "K4-minus" => vec![k4_minus_graph()],
        "F-star" => vec![f1_graph(), f2_graph(), f3_graph()],
        "F-prime" => vec![
            f1_graph(),
            f2_graph(),
            f3_graph(),
            f4_graph(),
            f5_graph(),
        ],
        _ => return Err(Error::UnknownFamily(name.into())),
    };
    ForbiddenFamily::new(members, Some(name.to_string()))
}
