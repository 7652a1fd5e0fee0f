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


//! Recomputes the reference table and lists any cell that differs.

use pentakirch::table::{compare_with_reference, compute_table, render_text};

fn main() -> pentakirch::Result<()> {
    let rows = compute_table()?;
    print!("{}", render_text(&rows));
    let deviations = compare_with_reference(&rows);
    println!("{} deviating cell(s)", deviations.len());
    for d in deviations {
        println!("  n={} {} {}: reference {}, computed {}", d.n, d.variant, d.column, d.reference, d.computed);
    }
    Ok(())
}
