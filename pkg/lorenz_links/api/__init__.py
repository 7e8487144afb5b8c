"""REST routers"""
