"The current qts version number"
qts_version = "0.3.1"
