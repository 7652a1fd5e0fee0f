// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.


//! Builds both chain families and prints their basic shape.
//!
//!     cargo run --example graph_families -- 3

use pentakirch::graph::{rail_swap, wiener_index_bfs, VertexLabel};
use pentakirch::{GraphFamily, Variant};

fn main() -> pentakirch::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for variant in Variant::ALL {
        let g = GraphFamily::new(variant, n)?.build();
        println!(
            "{variant} n={n}: {} vertices, {} edges, connected={}, rail swap is automorphism={}",
            g.vertex_count(),
            g.edge_count(),
            g.is_connected(),
            g.is_automorphism(&rail_swap(n)),
        );
        for start in [VertexLabel::upper(1), VertexLabel::lower(1)] {
            let id = start.id(n)?;
            let labels: Vec<String> = g
                .neighbors(id)
                .iter()
                .map(|&v| VertexLabel::from_id(v, n).map(|l| l.to_string()))
                .collect::<pentakirch::Result<_>>()?;
            println!("  neighbours of {start}: {}", labels.join(", "));
        }
        println!("  Wiener index (BFS): {}", wiener_index_bfs(&g)?);
    }
    Ok(())
}
