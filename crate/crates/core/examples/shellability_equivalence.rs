//! Decide the four equivalent shellability conditions on seeded random
//! closure operators and on two named instances.

use augbergman::instances;
use augbergman::shelling::{theorem_equivalence_report, DEFAULT_SEARCH_BUDGET};

fn main() -> augbergman::Result<()> {
    let mut named = vec![
        ("worked example".to_string(), instances::worked_example()),
        ("two-wedge".to_string(), instances::two_wedge()),
    ];
    for (i, f) in instances::random_operators(12, 4)?.into_iter().enumerate() {
        named.push((format!("random #{i} ({} elements)", f.len()), f));
    }
    for (name, f) in named {
        let r = theorem_equivalence_report(&f, DEFAULT_SEARCH_BUDGET)?;
        println!(
            "{name:<26} (i) {:?} (ii) {:?} (iii) {:?} (iv) {:?} agree {:?}",
            r.bergman_shellable,
            r.contractions_shellable,
            r.flags_first_bases_last,
            r.augmented_shellable,
            r.all_agree
        );
    }
    Ok(())
}
