mod field_tour {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/field_tour.rs"));
}

#[test]
fn field_tour_runs() {
    field_tour::run_example().expect("field_tour example should run");
}

mod construct_families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/construct_families.rs"));
}

#[test]
fn construct_families_runs() {
    construct_families::run_example().expect("construct_families example should run");
}

mod block_stabilizers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/block_stabilizers.rs"));
}

#[test]
fn block_stabilizers_runs() {
    block_stabilizers::run_example().expect("block_stabilizers example should run");
}

mod orbit_splitting {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orbit_splitting.rs"));
}

#[test]
fn orbit_splitting_runs() {
    orbit_splitting::run_example().expect("orbit_splitting example should run");
}

mod invariant_search {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/invariant_search.rs"));
}

#[test]
fn invariant_search_runs() {
    invariant_search::run_example().expect("invariant_search example should run");
}

mod classification_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classification_table.rs"));
}

#[test]
fn classification_table_runs() {
    classification_table::run_example().expect("classification_table example should run");
}

mod design_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/design_files.rs"));
}

#[test]
fn design_files_runs() {
    design_files::run_example().expect("design_files example should run");
}
