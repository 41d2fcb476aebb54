use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let header = crate_dir.join("include").join("schubert_codes.h");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        Err(e) => {
            // Keep the committed header usable even if generation fails
            // (e.g. offline doc builds); fail loudly otherwise.
            if header.exists() {
                println!("cargo:warning=cbindgen failed, using committed header: {e}");
            } else {
                panic!("cbindgen failed and no committed header exists: {e}");
            }
        }
    }
}
