//! The link of a flat vertex `x_F` in the augmented Bergman complex splits
//! as the augmented complex of the restriction joined with the Bergman
//! complex of the contraction.

use augbergman::bergman::{augmented_bergman, flat_label, link_factorization};
use augbergman::instances;

fn main() -> augbergman::Result<()> {
    let f = instances::worked_example();
    let delta = augmented_bergman(&f)?;
    for flat in f.proper_flats() {
        let link = delta.link(&[flat_label(&f, flat)])?;
        let parts = link_factorization(&f, flat)?;
        let joined = parts.relabeled_join()?;
        println!(
            "F = {:<7} link: {:>2} facets = {} x {} ; equal: {}",
            f.format_set(flat),
            link.facet_count(),
            parts.left.facet_count(),
            parts.right.facet_count(),
            link == joined
        );
    }
    Ok(())
}
