use locsem_core::axioms::{self, AxiomId};
use locsem_core::enumerate::{for_each_associative_table, unary_maps};
use locsem_core::semigroup::FiniteUnarySemigroup;

fn main() {
    let mut v1_fail = 0u64; // a + band + b => c
    let mut v2_fail = 0u64; // band + fixes + b => c
    let mut v1_seen = 0u64;
    let mut v2_seen = 0u64;
    for order in 1..=3 {
        let names: Vec<String> = (0..order).map(|i| format!("x{i}")).collect();
        for_each_associative_table(order, false, |table| {
            for plus in unary_maps(order) {
                let s = FiniteUnarySemigroup::new(names.clone(), table.to_vec(), Some(plus.clone()), None, None).unwrap();
                let a = axioms::check_axiom(&s, AxiomId::Loc_a).unwrap().holds;
                let b = axioms::check_axiom(&s, AxiomId::Loc_b).unwrap().holds;
                let c = axioms::check_axiom(&s, AxiomId::Loc_c).unwrap().holds;
                let projections = s.projections().unwrap();
                let band = projections.iter().all(|&p| s.mul(p, p) == p) && s.is_closed(&projections);
                let fixes = projections.iter().all(|&p| plus[p] == p);
                if a && band && b { v1_seen += 1; if !c { v1_fail += 1; } }
                if band && fixes && b { v2_seen += 1; if !c { v2_fail += 1; } }
            }
        });
    }
    println!("variant 1 (4.1a + band + 4.1b => 4.1c): {v1_fail} failures / {v1_seen}");
    println!("variant 2 (band + plus fixes S+ + 4.1b => 4.1c): {v2_fail} failures / {v2_seen}");
}
