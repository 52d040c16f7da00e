"""
Integration tests for linper

Integration tests verify that the CLI, the service facade and the library
work together, and run the brute-force oracle suites.

Guidelines:
- Run the CLI in-process through cli.main()
- Use tmp_path for universe files and reports
- Mark the long oracle runs as slow
"""
