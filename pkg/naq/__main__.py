"""
Allow ``python -m naq``
"""
import sys

from naq.main import main

sys.exit(main())
