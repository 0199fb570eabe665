"""data handling module for brpiclab: group specifications, report files and the cache."""
