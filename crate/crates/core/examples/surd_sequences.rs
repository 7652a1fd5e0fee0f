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


//! Integer sequences behind the closed forms, evaluated both by
//! recurrence and by exact surd powers.

use pentakirch::surd::{
    characteristic_roots, r_closed_form, r_prime_sequence_upto, r_sequence_upto, trace_power_t,
    SurdValue,
};

fn main() {
    let r = r_sequence_upto(12);
    let rp = r_prime_sequence_upto(12);
    println!("{:>3} {:>14} {:>14} {:>14}", "i", "r_i", "r'_i", "closed r_i");
    for i in 0..12 {
        println!("{i:>3} {:>14} {:>14} {:>14}", r[i], rp[i], r_closed_form(i).to_string());
    }
    let unit = SurdValue::from_ints(5, 0, 0, 2);
    for n in 1..=6 {
        let t = unit.pow(n) + unit.conj_sqrt2().pow(n);
        println!("t_{n} = {} = {t}", trace_power_t(n as usize));
    }
    let roots: Vec<String> = characteristic_roots().iter().map(ToString::to_string).collect();
    println!("roots of x^4 - 10x^2 + 1: {}", roots.join(", "));
    println!("(5 + 2√6)^-1 = {}", unit.inverse().unwrap());
}
