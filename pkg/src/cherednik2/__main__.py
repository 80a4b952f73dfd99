from cherednik2.cli import main

raise SystemExit(main())
