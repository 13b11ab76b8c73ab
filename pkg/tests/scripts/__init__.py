# Tests for executable scripts
