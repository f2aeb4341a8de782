//! Regenerates the bundled loop documents:
//! `cargo run -p ncoons --example write_fixtures -- fixtures`

use std::path::PathBuf;

use ncoons::fixtures;
use ncoons::io::{write_loop, LoopDocument};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, boundary) in fixtures::all() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, write_loop(&LoopDocument::from_loop(&boundary)))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
