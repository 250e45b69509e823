namespace tropikit {}
