import sys

from figrelabel.main import main

sys.exit(main())
