//! Sweep of the defining relations as equalities of linear maps.

use std::collections::BTreeMap;

use slnweb::webs::check_relations;

fn main() {
    for n in 2..=4 {
        let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for c in check_relations(n).unwrap() {
            let e = tally.entry(c.relation).or_default();
            e.0 += c.passed as usize;
            e.1 += 1;
        }
        println!("N = {n}");
        for (rel, (ok, total)) in tally {
            println!("  {rel:<16} {ok}/{total}");
        }
    }
}
