from tetra_subgroups.cli import main

raise SystemExit(main())
