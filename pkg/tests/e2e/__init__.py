"""
End-to-end tests for linper

E2E tests run the CLI as a separate process, the way a user would:
- argument parsing and exit codes
- universe loading from flags and the environment
- JSON documents on stdout, errors on stderr
- report files written by crosscheck

Guidelines:
- Use subprocess to run CLI commands
- Verify actual command output
- Tests may take > 0.1s
"""
