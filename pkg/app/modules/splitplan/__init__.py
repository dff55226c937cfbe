# Split plan module
