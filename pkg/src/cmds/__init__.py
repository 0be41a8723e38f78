# Command modules for the tsrforge CLI
