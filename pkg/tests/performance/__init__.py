# Performance Tests
