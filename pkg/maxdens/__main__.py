from maxdens.cli import main

raise SystemExit(main())
