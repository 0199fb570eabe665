"""brpiclab's backend packages: groups, cohomology and the Brauer-Picard pipeline."""
