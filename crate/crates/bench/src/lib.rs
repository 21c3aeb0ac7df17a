//! Fixed inputs shared by the benchmarks.

use pierce_core::{build_witness_list, gallery7, gen_clustered, gen_pairwise, Instance, WitnessList, GALLERY_DELTA};

pub fn gallery() -> Instance {
    gallery7(GALLERY_DELTA).expect("gallery instance")
}

pub fn pairwise(n: usize) -> Instance {
    gen_pairwise(n, 1).expect("pairwise instance")
}

pub fn clustered(p: usize, n: usize) -> Instance {
    gen_clustered(p, n, 7).expect("clustered instance")
}

pub fn witnesses(inst: &Instance) -> WitnessList {
    build_witness_list(&inst.bodies, &inst.curve).expect("witness list")
}
