import sys
from pathlib import Path

from hypothesis import settings

# Allow `import helpers` from any test module regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")
